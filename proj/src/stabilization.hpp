#pragma once

#include "curved.hpp"
#include "groebner.hpp"

namespace mfk {

// Koszul-type factorization on m exterior generators over `ring`:
//   d = sum_i coeffs[i] * (e_i wedge)  +  sum_i gens[i] * iota_{e_i}
// Cartan's formula gives d^2 = (sum_i gens[i]*coeffs[i]) * id, so the caller
// must pass W equal to that sum (verify enforces it).  Even/odd pieces are
// the even/odd exterior powers, basis ordered by increasing subset mask.
MatrixFactorization koszul_factorization(RingPtr ring, const Polynomial &W,
                                         const std::vector<Polynomial> &gens,
                                         const std::vector<Polynomial> &coeffs);

// Stabilization of a module on the zero fiber.  F is a presentation over
// A/(W) (same variables as q1's ring A, with W appended as the last
// relation); q1 is an injective presentation over A of the same module.
// Produces (q1, q0) with q0 the lift of W*id through q1.
//
// Errors: RingMismatch when F.ring is not q1's ring plus one relation,
// PresentationMismatch when coker(q1) and F disagree over A/(W), LiftFailed
// when W*id does not factor through q1 (e.g. W does not kill F).
MatrixFactorization stabilize(const ModulePresentation &F,
                              const FreeModuleMap &q1,
                              const GbOptions &opts = {});

// Residue-field stabilization: exterior algebra on the pairs (i, w_i) from
// variable_decompose(W), with d = sum w_i (e_i wedge) + sum x_i iota_i.
// Requires W(0) = 0.
MatrixFactorization koszul_stab(const Polynomial &W);

// Q[x1..xn, y1..yn] with A's monomial order; A must have no relations.
// The first block carries pi_1, the second pi_2.
RingPtr product_ring(const RingPtr &A);

// Difference quotients W_i over prod = product_ring(A) with
//   pi_1*W - pi_2*W = sum_i (x_i - y_i) * W_i,
// telescoped one variable at a time in ring order (deterministic, exact).
std::vector<Polynomial> difference_quotients(const Polynomial &W,
                                             const RingPtr &prod);

// Stabilized diagonal: Koszul factorization of W~ = pi_1*W - pi_2*W on the
// regular sequence (x_i - y_i) with difference-quotient coefficients.  Its
// cokernel presents the diagonal ring A over (A tensor A)/(W~).
MatrixFactorization diagonal_mf(const Polynomial &W);

} // namespace mfk
