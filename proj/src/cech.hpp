#pragma once

#include "homcx.hpp"

namespace mfk {

// Cover of Spec(ambient) by the basic opens D(f_i).  Valid iff the f_i
// generate the unit ideal.
struct CechCover {
  RingPtr ambient;
  std::vector<Polynomial> denominators;
};

// Certificate check 1 = sum g_i f_i via lift; NotACover on failure or on a
// zero denominator (an empty chart cannot be represented by truncation).
void validate_cover(const CechCover &cover, const GbOptions &opts = {});

// Localized chart ring A[t_S]/(t_S * f_S - 1) for the intersection indexed
// by `mask` (bit i set = chart i participates); f_S is the product of the
// participating denominators.  The fresh variable is named deterministically
// ("t" + 1-based indices, underscores appended on collision).
RingPtr chart_ring(const CechCover &cover, uint32_t mask);

// Z/2-graded complex of free modules: d_even maps the even piece to the odd
// piece and vice versa; both composites vanish modulo the ring relations.
struct TwoPeriodicComplex {
  RingPtr ring;
  size_t even_rank = 0, odd_rank = 0;
  FreeModuleMap d_even, d_odd;
};

// Restriction data from subset `from_mask` to `to_mask` = from_mask + one
// chart.  Matrices act on the numerator coordinates and are entered over the
// ambient ring; the truncation stage supplies the f^d twist.
struct CechRestriction {
  uint32_t from_mask = 0, to_mask = 0;
  FreeModuleMap even, odd;
};

// Per-intersection complexes (indexed by subset mask, entry 0 unused) with
// entries over the ambient ring (numerator contract: an entry a over A
// stands for a/1 over the localized chart ring), plus one restriction per
// covering inclusion.
struct CechHyperInput {
  CechCover cover;
  std::vector<TwoPeriodicComplex> charts;
  std::vector<CechRestriction> restrictions;
};

// The same complex on every intersection with identity restrictions (the
// constant-sheaf-of-complexes case used by the Hochschild routes).
CechHyperInput constant_hyper_input(const CechCover &cover,
                                    const TwoPeriodicComplex &cx);

struct CechResult {
  QDim even_dim, odd_dim;
  ModulePresentation even, odd;
  // truncation stage at which three consecutive dimension vectors agreed;
  // 0 for the trivial-cover shortcut
  size_t stabilized_at = 0;
};

// Hypercohomology of the Cech total complex, per total parity.
//
// The localization A_{f_S} is the colimit of A --f_S--> A --f_S--> ...; the
// stage-d slice of the total complex is a finite free A-complex whose Cech
// blocks carry f^d twists.  Dimensions are reported once three consecutive
// stages agree (cap: stage 10, BudgetExceeded beyond).  Stage homology
// counts torsion classes that the colimit transition maps kill, so the
// reported dimensions are exact when the homology's support meets no V(f_i)
// (true for every shipped suite, whose denominators are units at the
// singularity); see the decisions ledger.
CechResult cech_hyper(const CechHyperInput &input, const GbOptions &opts = {});

// Cech model of Ext over the cover: per-intersection Hom-complexes (built
// over the honest chart rings and checked there), assembled through the
// ambient-entry total complex.  For cover {1} this is exactly ext(P, Q).
CechResult cech_ext(const MatrixFactorization &P,
                    const MatrixFactorization &Q, const CechCover &cover,
                    const GbOptions &opts = {});

} // namespace mfk
