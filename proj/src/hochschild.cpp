#include "hochschild.hpp"

#include <bit>

namespace mfk {

static std::vector<Polynomial> partials(const Polynomial &W) {
  std::vector<Polynomial> dW;
  for (size_t i = 0; i < W.ring()->arity(); ++i)
    dW.push_back(partial_derivative(W, i));
  return dW;
}

// Shared exterior-algebra scaffolding: `lower` chooses contraction
// (degree -1, coefficient on present slots) versus wedge (degree +1, on
// absent slots); both use the sign (-1)^{#slots below}.
static TwoPeriodicComplex exterior_complex(const Polynomial &W, bool lower) {
  RingPtr A = W.ring();
  if (A->relation_count() != 0)
    fail(ErrorKind::Unsupported,
         "polyvector/forms complexes need a polynomial ring, got " +
             A->describe());
  size_t n = A->arity();
  if (n >= 20)
    fail(ErrorKind::BudgetExceeded, "exterior algebra on " +
                                        std::to_string(n) +
                                        " variables is beyond desk scale");
  std::vector<Polynomial> dW = partials(W);

  std::vector<uint32_t> even, odd;
  std::vector<size_t> pos(size_t(1) << n, 0);
  for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
    auto &side = (std::popcount(s) % 2 == 0) ? even : odd;
    pos[s] = side.size();
    side.push_back(s);
  }

  auto block = [&](const std::vector<uint32_t> &src,
                   const std::vector<uint32_t> &dst) {
    FreeModuleMap d(A, dst.size(), src.size());
    for (size_t c = 0; c < src.size(); ++c) {
      uint32_t s = src[c];
      for (size_t i = 0; i < n; ++i) {
        uint32_t bit = uint32_t(1) << i;
        if (lower != bool(s & bit))
          continue;
        bool neg = std::popcount(s & (bit - 1)) % 2 != 0;
        uint32_t t = s ^ bit;
        Polynomial add = neg ? -dW[i] : dW[i];
        d.at(pos[t], c) = d.at(pos[t], c) + add;
      }
    }
    return d;
  };

  TwoPeriodicComplex cx;
  cx.ring = A;
  cx.even_rank = even.size();
  cx.odd_rank = odd.size();
  cx.d_even = block(even, odd);
  cx.d_odd = block(odd, even);
  return cx;
}

TwoPeriodicComplex polyvector_complex(const Polynomial &W) {
  return exterior_complex(W, true);
}

TwoPeriodicComplex forms_complex(const Polynomial &W) {
  return exterior_complex(W, false);
}

QDim milnor_number(const Polynomial &W, const GbOptions &opts) {
  RingPtr A = W.ring();
  std::vector<Polynomial> dW = partials(W);
  FreeModuleMap rels(A, 1, dW.size());
  for (size_t i = 0; i < dW.size(); ++i)
    rels.at(0, i) = dW[i];
  return q_dimension(ModulePresentation{A, 1, rels}, opts);
}

CechResult hh_cohomology(const Polynomial &W, const CechCover &cover,
                         const GbOptions &opts) {
  require_same_ring(W.ring(), cover.ambient, "hh_cohomology");
  return cech_hyper(constant_hyper_input(cover, polyvector_complex(W)), opts);
}

CechResult hh_homology(const Polynomial &W, const CechCover &cover,
                       const GbOptions &opts) {
  require_same_ring(W.ring(), cover.ambient, "hh_homology");
  return cech_hyper(constant_hyper_input(cover, forms_complex(W)), opts);
}

ExtResult hh_via_diagonal(const Polynomial &W, const GbOptions &opts) {
  MatrixFactorization D = diagonal_mf(W);
  return ext(D, D, opts);
}

HhComparison compare_hh(const Polynomial &W, const CechCover &cover,
                        const GbOptions &opts) {
  HhComparison r;
  CechResult poly = hh_cohomology(W, cover, opts);
  ExtResult diag = hh_via_diagonal(W, opts);
  r.poly_even = poly.even_dim;
  r.poly_odd = poly.odd_dim;
  r.diag_even = diag.even_dim;
  r.diag_odd = diag.odd_dim;
  r.mu = milnor_number(W, opts);
  r.stabilized_at = poly.stabilized_at;
  r.pass = r.poly_even == r.diag_even && r.poly_odd == r.diag_odd;
  return r;
}

CySymmetryReport cy_symmetry_check(const MatrixFactorization &P,
                                   const MatrixFactorization &Q, size_t n,
                                   const GbOptions &opts) {
  CySymmetryReport r;
  r.n = n;
  ExtResult pq = ext(P, Q, opts);
  ExtResult qp = ext(Q, P, opts);
  r.pq_even = pq.even_dim;
  r.pq_odd = pq.odd_dim;
  r.qp_even = qp.even_dim;
  r.qp_odd = qp.odd_dim;
  if (n % 2 == 0)
    r.pass = r.pq_even == r.qp_even && r.pq_odd == r.qp_odd;
  else
    r.pass = r.pq_even == r.qp_odd && r.pq_odd == r.qp_even;
  return r;
}

} // namespace mfk
