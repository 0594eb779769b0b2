#pragma once

#include "cech.hpp"
#include "stabilization.hpp"

namespace mfk {

// Koszul complex of polyvector fields (Lambda T, contraction with dW),
// folded Z/2: the q-th exterior power sits in parity q mod 2, basis ordered
// by increasing subset mask.  The differential contracts with
// dW = sum_i (dW/dx_i) dx_i, slot sign (-1)^{position}; squares to zero.
TwoPeriodicComplex polyvector_complex(const Polynomial &W);

// Forms complex (Omega, dW wedge): same underlying pieces, differential
// raises exterior degree by left wedge with dW; squares to zero.
TwoPeriodicComplex forms_complex(const Polynomial &W);

// Milnor number as the q-dimension of the Jacobian ring A/(dW/dx_1, ...).
QDim milnor_number(const Polynomial &W, const GbOptions &opts = {});

// Cech hypercohomology of the polyvector complex over the cover; for the
// trivial cover this is the Koszul homology of the partials.
CechResult hh_cohomology(const Polynomial &W, const CechCover &cover,
                         const GbOptions &opts = {});

// Hypercohomology of (Omega, dW wedge); for an isolated singularity on
// affine n-space it is concentrated in parity n mod 2 with total dim mu.
CechResult hh_homology(const Polynomial &W, const CechCover &cover,
                       const GbOptions &opts = {});

// Independent route: End of the stabilized diagonal over the product ring.
ExtResult hh_via_diagonal(const Polynomial &W, const GbOptions &opts = {});

struct HhComparison {
  QDim poly_even, poly_odd;   // polyvector route
  QDim diag_even, diag_odd;   // diagonal-End route
  QDim mu;                    // Jacobian-ring oracle
  size_t stabilized_at = 0;
  bool pass = false;          // per-parity dimension equality of the routes
};

// Both routes for HH^* computed and compared; the cover feeds the
// polyvector side (use {1} for the affine chart).
HhComparison compare_hh(const Polynomial &W, const CechCover &cover,
                        const GbOptions &opts = {});

struct CySymmetryReport {
  QDim pq_even, pq_odd; // Ext(P, Q)
  QDim qp_even, qp_odd; // Ext(Q, P)
  size_t n = 0;
  bool pass = false; // dim Ext^i(P,Q) == dim Ext^{i+n mod 2}(Q,P)
};

// Dimension-level Serre symmetry for factorizations on affine n-space.
CySymmetryReport cy_symmetry_check(const MatrixFactorization &P,
                                   const MatrixFactorization &Q, size_t n,
                                   const GbOptions &opts = {});

} // namespace mfk
