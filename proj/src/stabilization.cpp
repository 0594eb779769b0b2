#include "stabilization.hpp"

#include <bit>

namespace mfk {

MatrixFactorization koszul_factorization(RingPtr ring, const Polynomial &W,
                                         const std::vector<Polynomial> &gens,
                                         const std::vector<Polynomial> &coeffs) {
  if (gens.size() != coeffs.size())
    fail(ErrorKind::ShapeMismatch,
         "koszul_factorization: " + std::to_string(gens.size()) +
             " generators but " + std::to_string(coeffs.size()) +
             " coefficients");
  size_t m = gens.size();
  if (m >= 20)
    fail(ErrorKind::BudgetExceeded,
         "koszul_factorization: 2^" + std::to_string(m) +
             " exterior basis elements is beyond desk scale");

  std::vector<uint32_t> even, odd;
  std::vector<size_t> pos(size_t(1) << m, 0);
  for (uint32_t s = 0; s < (uint32_t(1) << m); ++s) {
    auto &side = (std::popcount(s) % 2 == 0) ? even : odd;
    pos[s] = side.size();
    side.push_back(s);
  }

  // d restricted to the given parity: source basis e_S goes to
  // coeffs[i]*e_{S+i} with sign (-1)^{#bits of S below i}, and to
  // gens[i]*e_{S-i} with the same sign.
  auto block = [&](const std::vector<uint32_t> &src,
                   const std::vector<uint32_t> &dst) {
    FreeModuleMap d(ring, dst.size(), src.size());
    for (size_t c = 0; c < src.size(); ++c) {
      uint32_t s = src[c];
      for (size_t i = 0; i < m; ++i) {
        uint32_t bit = uint32_t(1) << i;
        bool neg = std::popcount(s & (bit - 1)) % 2 != 0;
        const Polynomial &coef = (s & bit) ? gens[i] : coeffs[i];
        uint32_t t = s ^ bit;
        Polynomial add = neg ? -coef : coef;
        d.at(pos[t], c) = d.at(pos[t], c) + add;
      }
    }
    return d;
  };

  MatrixFactorization P = make_mf(ring, W, block(odd, even), block(even, odd));
  verify(P);
  return P;
}

MatrixFactorization koszul_stab(const Polynomial &W) {
  RingPtr ring = W.ring();
  auto pairs = variable_decompose(W);
  std::vector<Polynomial> gens, coeffs;
  for (auto &[idx, w] : pairs) {
    gens.push_back(Polynomial::variable(ring, idx));
    coeffs.push_back(w);
  }
  return koszul_factorization(ring, W, gens, coeffs);
}

static bool terms_equal(const std::vector<Term> &a,
                        const std::vector<Term> &b) {
  if (a.size() != b.size())
    return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i].mono == b[i].mono) || a[i].coeff != b[i].coeff)
      return false;
  return true;
}

MatrixFactorization stabilize(const ModulePresentation &F,
                              const FreeModuleMap &q1, const GbOptions &opts) {
  const RingPtr &A = q1.ring();
  const RingPtr &B = F.ring;
  bool ring_ok = B->vars() == A->vars() && B->order() == A->order() &&
                 B->relation_count() == A->relation_count() + 1;
  for (size_t i = 0; ring_ok && i < A->relation_count(); ++i)
    ring_ok = terms_equal(A->relation_terms(i), B->relation_terms(i));
  if (!ring_ok)
    fail(ErrorKind::RingMismatch,
         "stabilize: F must live over the resolution's ring " +
             A->describe() + " with exactly one extra relation (the "
             "superpotential); got " + B->describe());
  Polynomial W = Polynomial::from_terms(
      A, std::vector<Term>(B->relation_terms(B->relation_count() - 1)));

  if (F.generators != q1.rows())
    fail(ErrorKind::PresentationMismatch,
         "stabilize: F has " + std::to_string(F.generators) +
             " generators but the resolution presents " +
             std::to_string(q1.rows()));

  // coker(q1) and F must agree over A/(W): mutual containment of relation
  // column spans (ring relations participate via the Groebner engine).
  FreeModuleMap q1_over_B =
      q1.map_entries(B, [&](const Polynomial &p) { return transport(p, B); });
  GroebnerBasis from_res = groebner(q1_over_B, opts);
  GroebnerBasis from_F = groebner(F.relations, opts);
  for (size_t c = 0; c < F.relations.cols(); ++c)
    if (!normal_form(F.relations.col(c), from_res, opts).is_zero())
      fail(ErrorKind::PresentationMismatch,
           "stabilize: relation column " + std::to_string(c) +
               " of F is not in the span of the resolution's cokernel");
  for (size_t c = 0; c < q1_over_B.cols(); ++c)
    if (!normal_form(q1_over_B.col(c), from_F, opts).is_zero())
      fail(ErrorKind::PresentationMismatch,
           "stabilize: resolution column " + std::to_string(c) +
               " is not in the span of F's relations");

  FreeModuleMap target = FreeModuleMap::identity(A, q1.rows()).scaled(W);
  auto q0 = lift(q1, target, opts);
  if (!q0)
    fail(ErrorKind::LiftFailed,
         "stabilize: W*id does not factor through the resolution (the "
         "module is not killed by " + W.to_string() +
             ", or q1 is not a valid resolution)");

  MatrixFactorization Q = make_mf(A, W, q1, *q0);
  verify(Q);
  return Q;
}

RingPtr product_ring(const RingPtr &A) {
  if (A->relation_count() != 0)
    fail(ErrorKind::Unsupported,
         "product_ring: base must be a polynomial ring, got " + A->describe());
  size_t n = A->arity();
  std::vector<std::string> vars;
  for (size_t i = 0; i < n; ++i)
    vars.push_back("x" + std::to_string(i + 1));
  for (size_t i = 0; i < n; ++i)
    vars.push_back("y" + std::to_string(i + 1));
  return Ring::make(vars, A->order());
}

std::vector<Polynomial> difference_quotients(const Polynomial &W,
                                             const RingPtr &prod) {
  size_t n = W.ring()->arity();
  if (prod->arity() != 2 * n)
    fail(ErrorKind::ArityMismatch,
         "difference_quotients: product ring must have " +
             std::to_string(2 * n) + " variables, got " +
             std::to_string(prod->arity()));

  std::vector<Polynomial> out;
  for (size_t i = 0; i < n; ++i) {
    // P = W(y_1..y_{i-1}, x_i, x_{i+1}..x_n); substituting x_i -> y_i gives
    // the next telescoping stage, so the i-th quotient is
    //   sum_k c_k * sum_{j<k} x_i^j y_i^{k-1-j}
    // with c_k the x_i^k coefficient of P.
    std::vector<int> var_map(n);
    for (size_t j = 0; j < n; ++j)
      var_map[j] = int(j < i ? n + j : j);
    Polynomial P = promote_with_map(W, prod, var_map);

    Polynomial xi = Polynomial::variable(prod, i);
    Polynomial yi = Polynomial::variable(prod, n + i);
    Polynomial quotient = Polynomial::zero(prod);
    for (uint32_t k = 1; k <= max_exponent(P, i); ++k) {
      Polynomial ck = coefficient_of(P, i, k);
      if (ck.is_zero())
        continue;
      Polynomial geom = Polynomial::zero(prod);
      for (uint32_t j = 0; j < k; ++j)
        geom += xi.pow(j) * yi.pow(k - 1 - j);
      quotient += ck * geom;
    }
    out.push_back(quotient);
  }
  return out;
}

MatrixFactorization diagonal_mf(const Polynomial &W) {
  if (W.constant_value() != 0)
    fail(ErrorKind::ConstantTerm,
         "diagonal_mf: W must vanish at the origin, has constant term " +
             rational_to_string(W.constant_value()));
  RingPtr A = W.ring();
  RingPtr prod = product_ring(A);
  size_t n = A->arity();

  std::vector<int> first(n), second(n);
  for (size_t j = 0; j < n; ++j) {
    first[j] = int(j);
    second[j] = int(n + j);
  }
  Polynomial Wt = promote_with_map(W, prod, first) -
                  promote_with_map(W, prod, second);

  std::vector<Polynomial> gens;
  for (size_t i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(prod, i) -
                   Polynomial::variable(prod, n + i));
  return koszul_factorization(prod, Wt, gens, difference_quotients(W, prod));
}

} // namespace mfk
