#include "cech.hpp"

#include <algorithm>
#include <bit>

namespace mfk {

void validate_cover(const CechCover &cover, const GbOptions &opts) {
  if (cover.denominators.empty())
    fail(ErrorKind::NotACover, "cover needs at least one denominator");
  for (size_t i = 0; i < cover.denominators.size(); ++i) {
    require_same_ring(cover.ambient, cover.denominators[i].ring(),
                      "validate_cover");
    if (cover.denominators[i].is_zero())
      fail(ErrorKind::NotACover,
           "denominator " + std::to_string(i) + " is zero (empty chart)");
  }
  FreeModuleMap gens(cover.ambient, 1, cover.denominators.size());
  for (size_t i = 0; i < cover.denominators.size(); ++i)
    gens.at(0, i) = cover.denominators[i];
  ModuleElem one(cover.ambient, 1);
  one.comp[0] = Polynomial::constant(cover.ambient, 1);
  if (!lift(gens, one, opts))
    fail(ErrorKind::NotACover,
         "1 is not in the ideal of the denominators; the basic opens do "
         "not cover Spec " + cover.ambient->describe());
}

static Polynomial subset_product(const CechCover &cover, uint32_t mask) {
  Polynomial f = Polynomial::constant(cover.ambient, 1);
  for (size_t i = 0; i < cover.denominators.size(); ++i)
    if (mask & (uint32_t(1) << i))
      f = f * cover.denominators[i];
  return f;
}

RingPtr chart_ring(const CechCover &cover, uint32_t mask) {
  const RingPtr &A = cover.ambient;
  std::string name = "t";
  for (size_t i = 0; i < cover.denominators.size(); ++i)
    if (mask & (uint32_t(1) << i))
      name += std::to_string(i + 1);
  while (A->var_index(name) >= 0)
    name += "_";

  std::vector<std::string> vars = A->vars();
  vars.push_back(name);
  RingPtr base = Ring::make(vars, A->order());

  std::vector<Polynomial> rels;
  for (size_t i = 0; i < A->relation_count(); ++i)
    rels.push_back(promote_by_name(ring_relation(A, i), base));
  Polynomial t = Polynomial::variable(base, vars.size() - 1);
  rels.push_back(t * promote_by_name(subset_product(cover, mask), base) -
                 Polynomial::constant(base, 1));
  return with_relations(base, rels);
}

CechHyperInput constant_hyper_input(const CechCover &cover,
                                    const TwoPeriodicComplex &cx) {
  size_t k = cover.denominators.size();
  if (k > 8)
    fail(ErrorKind::BudgetExceeded,
         "constant_hyper_input: " + std::to_string(k) +
             " charts is beyond desk scale");
  CechHyperInput in;
  in.cover = cover;
  in.charts.assign(size_t(1) << k, cx);
  for (uint32_t s = 1; s < (uint32_t(1) << k); ++s)
    for (size_t j = 0; j < k; ++j)
      if (!(s & (uint32_t(1) << j)))
        in.restrictions.push_back(
            {s, s | (uint32_t(1) << j),
             FreeModuleMap::identity(cover.ambient, cx.even_rank),
             FreeModuleMap::identity(cover.ambient, cx.odd_rank)});
  return in;
}

namespace {

struct Assembler {
  const CechHyperInput &in;
  RingPtr A;
  size_t k;
  uint32_t full;
  // restriction lookup by (from, to)
  std::vector<const CechRestriction *> restr; // index from * 2^k + to

  explicit Assembler(const CechHyperInput &input)
      : in(input), A(input.cover.ambient),
        k(input.cover.denominators.size()),
        full(uint32_t((size_t(1) << k) - 1)) {
    restr.assign((size_t(1) << k) * (size_t(1) << k), nullptr);
  }

  const TwoPeriodicComplex &chart(uint32_t s) const { return in.charts[s]; }

  const CechRestriction &restriction(uint32_t from, uint32_t to) const {
    const CechRestriction *r = restr[size_t(from) * (size_t(1) << k) + to];
    if (!r)
      fail(ErrorKind::IncompatibleRestrictions,
           "missing restriction from subset " + std::to_string(from) +
               " to subset " + std::to_string(to));
    return *r;
  }

  void check_inputs() {
    if (in.charts.size() != size_t(1) << k)
      fail(ErrorKind::ShapeMismatch,
           "cech_hyper: expected " + std::to_string(size_t(1) << k) +
               " chart complexes indexed by subset mask, got " +
               std::to_string(in.charts.size()));
    for (uint32_t s = 1; s <= full; ++s) {
      const TwoPeriodicComplex &c = chart(s);
      require_same_ring(A, c.ring, "cech_hyper chart");
      if (c.d_even.rows() != c.odd_rank || c.d_even.cols() != c.even_rank ||
          c.d_odd.rows() != c.even_rank || c.d_odd.cols() != c.odd_rank)
        fail(ErrorKind::ShapeMismatch,
             "cech_hyper: differential shapes of subset " +
                 std::to_string(s) + " do not match the stated ranks");
    }
    for (const CechRestriction &r : in.restrictions) {
      if (r.from_mask == 0 || r.from_mask > full || r.to_mask > full ||
          std::popcount(r.to_mask ^ r.from_mask) != 1 ||
          (r.to_mask & r.from_mask) != r.from_mask)
        fail(ErrorKind::IncompatibleRestrictions,
             "restriction must go from a subset to that subset plus one "
             "chart");
      restr[size_t(r.from_mask) * (size_t(1) << k) + r.to_mask] = &r;
    }
    // every covering inclusion present, squares with the internal
    // differential commute exactly
    for (uint32_t s = 1; s <= full; ++s)
      for (size_t j = 0; j < k; ++j) {
        uint32_t bit = uint32_t(1) << j;
        if (s & bit)
          continue;
        const CechRestriction &r = restriction(s, s | bit);
        const TwoPeriodicComplex &src = chart(s);
        const TwoPeriodicComplex &dst = chart(s | bit);
        if (r.even.rows() != dst.even_rank || r.even.cols() != src.even_rank ||
            r.odd.rows() != dst.odd_rank || r.odd.cols() != src.odd_rank)
          fail(ErrorKind::IncompatibleRestrictions,
               "restriction " + std::to_string(s) + " -> " +
                   std::to_string(s | bit) + " has the wrong shape");
        if (!(dst.d_even * r.even == r.odd * src.d_even) ||
            !(dst.d_odd * r.odd == r.even * src.d_odd))
          fail(ErrorKind::IncompatibleRestrictions,
               "restriction " + std::to_string(s) + " -> " +
                   std::to_string(s | bit) +
                   " does not commute with the differentials");
      }
    // restriction cocycle: the two ways around each square agree
    for (uint32_t s = 1; s <= full; ++s)
      for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
          uint32_t bi = uint32_t(1) << i, bj = uint32_t(1) << j;
          if ((s & bi) || (s & bj))
            continue;
          const CechRestriction &ri = restriction(s, s | bi);
          const CechRestriction &rj = restriction(s, s | bj);
          const CechRestriction &rij = restriction(s | bi, s | bi | bj);
          const CechRestriction &rji = restriction(s | bj, s | bi | bj);
          if (!(rij.even * ri.even == rji.even * rj.even) ||
              !(rij.odd * ri.odd == rji.odd * rj.odd))
            fail(ErrorKind::IncompatibleRestrictions,
                 "restrictions around subset " + std::to_string(s) +
                     " + charts " + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + " do not commute");
        }
  }

  // Total-parity layout: the block of subset s (p = |s|-1) with internal
  // parity q contributes to total parity (p + q) mod 2.
  struct Layout {
    std::vector<size_t> offset; // by mask
    std::vector<int> piece;     // 0 = chart even piece, 1 = odd piece
    size_t total = 0;
  };

  Layout layout(int total_parity) const {
    Layout L;
    L.offset.assign(size_t(1) << k, 0);
    L.piece.assign(size_t(1) << k, 0);
    for (uint32_t s = 1; s <= full; ++s) {
      int p = std::popcount(s) - 1;
      int q = (total_parity - p) % 2;
      if (q < 0)
        q += 2;
      L.offset[s] = L.total;
      L.piece[s] = q;
      L.total += q == 0 ? chart(s).even_rank : chart(s).odd_rank;
    }
    return L;
  }

  // Differential between total parities at truncation stage d; the source
  // layout's `piece` tags determine every block choice.
  FreeModuleMap total_differential(uint32_t d, const Layout &src,
                                   const Layout &dst) const {
    FreeModuleMap D(A, dst.total, src.total);
    for (uint32_t s = 1; s <= full; ++s) {
      int p = std::popcount(s) - 1;
      const TwoPeriodicComplex &c = chart(s);
      // internal differential, with the total-complex sign (-1)^p
      {
        const FreeModuleMap &dmat = src.piece[s] == 0 ? c.d_even : c.d_odd;
        FreeModuleMap block = (p % 2 != 0) ? -dmat : dmat;
        D.paste(block, dst.offset[s], src.offset[s]);
      }
      // Cech blocks to s + one chart, twisted by f_j^d in numerator form
      for (size_t j = 0; j < k; ++j) {
        uint32_t bit = uint32_t(1) << j;
        if (s & bit)
          continue;
        uint32_t t = s | bit;
        const CechRestriction &r = restriction(s, t);
        const FreeModuleMap &rmat = src.piece[s] == 0 ? r.even : r.odd;
        int pos = std::popcount(t & (bit - 1));
        Polynomial tw = in.cover.denominators[j].pow(d);
        FreeModuleMap block = rmat.scaled(pos % 2 != 0 ? -tw : tw);
        D.paste(block, dst.offset[t], src.offset[s]);
      }
    }
    return D;
  }
};

} // namespace

static CechResult homology_of(const TwoPeriodicComplex &c,
                              const GbOptions &opts) {
  CechResult r;
  r.even = minimize_presentation(homology(c.d_odd, c.d_even, opts));
  r.odd = minimize_presentation(homology(c.d_even, c.d_odd, opts));
  r.even_dim = q_dimension(r.even, opts);
  r.odd_dim = q_dimension(r.odd, opts);
  r.stabilized_at = 0;
  return r;
}

CechResult cech_hyper(const CechHyperInput &input, const GbOptions &opts) {
  validate_cover(input.cover, opts);
  size_t k = input.cover.denominators.size();
  if (k > 8)
    fail(ErrorKind::BudgetExceeded,
         "cech_hyper: " + std::to_string(k) +
             " charts means 2^" + std::to_string(k) +
             " intersections per stage; beyond desk scale");

  // strict no-op for the trivial cover
  if (k == 1 && input.cover.denominators[0].is_constant()) {
    if (input.charts.size() != 2)
      fail(ErrorKind::ShapeMismatch,
           "cech_hyper: expected 2 chart complexes for a one-chart cover");
    return homology_of(input.charts[1], opts);
  }

  Assembler as(input);
  as.check_inputs();
  Assembler::Layout even = as.layout(0), odd = as.layout(1);

  const size_t stage_cap = 10;
  std::vector<std::pair<QDim, QDim>> history;
  CechResult last;
  for (uint32_t d = 1; d <= stage_cap; ++d) {
    TwoPeriodicComplex total;
    total.ring = input.cover.ambient;
    total.even_rank = even.total;
    total.odd_rank = odd.total;
    total.d_even = as.total_differential(d, even, odd);
    total.d_odd = as.total_differential(d, odd, even);
    last = homology_of(total, opts);
    last.stabilized_at = d;
    history.push_back({last.even_dim, last.odd_dim});
    size_t n = history.size();
    if (n >= 3 && history[n - 1] == history[n - 2] &&
        history[n - 2] == history[n - 3])
      return last;
  }
  fail(ErrorKind::BudgetExceeded,
       "cech_hyper: dimensions did not stabilize within " +
           std::to_string(stage_cap) + " truncation stages");
}

CechResult cech_ext(const MatrixFactorization &P, const MatrixFactorization &Q,
                    const CechCover &cover, const GbOptions &opts) {
  validate_cover(cover, opts);
  require_same_ring(cover.ambient, P.ring, "cech_ext");
  HomComplex H = hom_complex(P, Q, opts); // checks curvature and d^2

  size_t k = cover.denominators.size();
  // Fidelity of the localized model: build each intersection's Hom-complex
  // over its honest chart ring, where the d^2 check runs modulo t*f - 1.
  for (uint32_t s = 1; s < (uint32_t(1) << k); ++s) {
    RingPtr R = chart_ring(cover, s);
    auto promote = [&](const Polynomial &p) { return promote_by_name(p, R); };
    MatrixFactorization Ps = make_mf(R, promote(P.W),
                                     P.p1.map_entries(R, promote),
                                     P.p0.map_entries(R, promote));
    MatrixFactorization Qs = make_mf(R, promote(Q.W),
                                     Q.p1.map_entries(R, promote),
                                     Q.p0.map_entries(R, promote));
    hom_complex(Ps, Qs, opts);
  }

  TwoPeriodicComplex cx{P.ring, H.even_rank, H.odd_rank, H.d_even, H.d_odd};
  return cech_hyper(constant_hyper_input(cover, cx), opts);
}

} // namespace mfk
