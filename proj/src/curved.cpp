#include "curved.hpp"

namespace mfk {

MatrixFactorization make_mf(RingPtr ring, Polynomial W, FreeModuleMap p1,
                            FreeModuleMap p0) {
  require_same_ring(ring, W.ring(), "make_mf");
  require_same_ring(ring, p1.ring(), "make_mf");
  require_same_ring(ring, p0.ring(), "make_mf");
  if (p0.rows() != p1.cols() || p0.cols() != p1.rows())
    fail(ErrorKind::ShapeMismatch,
         "factorization maps have inconsistent shapes: p1 is " +
             std::to_string(p1.rows()) + "x" + std::to_string(p1.cols()) +
             ", p0 is " + std::to_string(p0.rows()) + "x" +
             std::to_string(p0.cols()));
  return MatrixFactorization{std::move(ring), std::move(W), std::move(p1),
                             std::move(p0)};
}

static void check_curvature(const FreeModuleMap &prod, const Polynomial &W,
                            const char *which, const GbOptions &opts) {
  for (size_t i = 0; i < prod.rows(); ++i)
    for (size_t j = 0; j < prod.cols(); ++j) {
      Polynomial expect =
          i == j ? W : Polynomial::zero(W.ring());
      Polynomial diff = reduce_mod_ring(prod.at(i, j) - expect, opts);
      if (!diff.is_zero())
        fail(ErrorKind::CurvatureMismatch,
             std::string("verify: ") + which + " entry (" +
                 std::to_string(i) + "," + std::to_string(j) +
                 ") expected " + expect.to_string() + ", found " +
                 prod.at(i, j).to_string());
    }
}

void verify(const MatrixFactorization &P, const GbOptions &opts) {
  check_curvature(P.p1 * P.p0, P.W, "p1*p0", opts);
  check_curvature(P.p0 * P.p1, P.W, "p0*p1", opts);
}

CurvedMap make_curved_map(const MatrixFactorization &source,
                          const MatrixFactorization &target, int parity,
                          FreeModuleMap a, FreeModuleMap b) {
  require_same_ring(source.ring, target.ring, "curved map");
  if (reduce_mod_ring(source.W - target.W).is_zero() == false)
    fail(ErrorKind::CurvatureMismatch,
         "curved map requires equal curvature: " + source.W.to_string() +
             " vs " + target.W.to_string());
  size_t a_rows = parity ? target.rank_odd() : target.rank_even();
  size_t b_rows = parity ? target.rank_even() : target.rank_odd();
  if (a.rows() != a_rows || a.cols() != source.rank_even() ||
      b.rows() != b_rows || b.cols() != source.rank_odd())
    fail(ErrorKind::ShapeMismatch, "curved map block shapes do not match");
  return CurvedMap{source, target, parity ? 1 : 0, std::move(a),
                   std::move(b)};
}

CurvedMap identity_map(const MatrixFactorization &P) {
  return CurvedMap{P, P, 0, FreeModuleMap::identity(P.ring, P.rank_even()),
                   FreeModuleMap::identity(P.ring, P.rank_odd())};
}

MatrixFactorization shift(const MatrixFactorization &P) {
  return MatrixFactorization{P.ring, P.W, -P.p0, -P.p1};
}

static bool zero_mod_ring(const FreeModuleMap &m, const GbOptions &opts) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!reduce_mod_ring(m.at(i, j), opts).is_zero())
        return false;
  return true;
}

MatrixFactorization cone(const CurvedMap &f, const GbOptions &opts) {
  if (f.parity != 0)
    fail(ErrorKind::NotClosed, "cone requires an even map");
  const MatrixFactorization &P = f.source;
  const MatrixFactorization &Q = f.target;
  // closedness: q f = f p on both graded pieces
  if (!zero_mod_ring(Q.p1 * f.b - f.a * P.p1, opts) ||
      !zero_mod_ring(Q.p0 * f.a - f.b * P.p0, opts))
    fail(ErrorKind::NotClosed,
         "cone: the map does not commute with the differentials");
  RingPtr R = P.ring;
  size_t e = Q.rank_even() + P.rank_odd();
  size_t o = Q.rank_odd() + P.rank_even();
  FreeModuleMap c1(R, e, o), c0(R, o, e);
  c1.paste(Q.p1, 0, 0);
  c1.paste(f.a, 0, Q.rank_odd());
  c1.paste(-P.p0, Q.rank_even(), Q.rank_odd());
  c0.paste(Q.p0, 0, 0);
  c0.paste(f.b, 0, Q.rank_even());
  c0.paste(-P.p1, Q.rank_odd(), Q.rank_even());
  return make_mf(R, Q.W, std::move(c1), std::move(c0));
}

MatrixFactorization direct_sum(const MatrixFactorization &P,
                               const MatrixFactorization &Q) {
  require_same_ring(P.ring, Q.ring, "direct_sum");
  if (P.W != Q.W)
    fail(ErrorKind::CurvatureMismatch,
         "direct_sum requires equal curvature");
  FreeModuleMap s1(P.ring, P.rank_even() + Q.rank_even(),
                   P.rank_odd() + Q.rank_odd());
  FreeModuleMap s0(P.ring, P.rank_odd() + Q.rank_odd(),
                   P.rank_even() + Q.rank_even());
  s1.paste(P.p1, 0, 0);
  s1.paste(Q.p1, P.rank_even(), P.rank_odd());
  s0.paste(P.p0, 0, 0);
  s0.paste(Q.p0, P.rank_odd(), P.rank_even());
  return MatrixFactorization{P.ring, P.W, std::move(s1), std::move(s0)};
}

MatrixFactorization dual(const MatrixFactorization &P) {
  return MatrixFactorization{P.ring, -P.W, P.p1.transpose(),
                             -P.p0.transpose()};
}

MatrixFactorization external_tensor(const MatrixFactorization &P,
                                    const MatrixFactorization &Q,
                                    const GbOptions &opts) {
  const RingPtr &A = P.ring;
  const RingPtr &B = Q.ring;
  if (A->order() != B->order())
    fail(ErrorKind::RingMismatch,
         "external_tensor requires a common monomial order");
  for (const auto &v : B->vars())
    if (A->var_index(v) >= 0)
      fail(ErrorKind::VariableCollision,
           "external_tensor: variable '" + v +
               "' appears in both factors");
  std::vector<std::string> vars = A->vars();
  vars.insert(vars.end(), B->vars().begin(), B->vars().end());
  RingPtr T0 = Ring::make(vars, A->order());
  std::vector<Polynomial> rels;
  for (size_t i = 0; i < A->relation_count(); ++i)
    rels.push_back(promote_by_name(ring_relation(A, i), T0));
  for (size_t i = 0; i < B->relation_count(); ++i)
    rels.push_back(promote_by_name(ring_relation(B, i), T0));
  RingPtr T = rels.empty() ? T0 : with_relations(T0, rels);

  auto up = [&](const FreeModuleMap &m) {
    return m.map_entries(T, [&](const Polynomial &p) {
      return promote_by_name(p, T);
    });
  };
  FreeModuleMap p1 = up(P.p1), p0 = up(P.p0);
  FreeModuleMap q1 = up(Q.p1), q0 = up(Q.p0);
  Polynomial W = promote_by_name(P.W, T) + promote_by_name(Q.W, T);

  size_t a0 = P.rank_even(), a1 = P.rank_odd();
  size_t b0 = Q.rank_even(), b1 = Q.rank_odd();
  auto id = [&](size_t n) { return FreeModuleMap::identity(T, n); };

  // (P (x) Q)_0 = P0Q0 + P1Q1,  (P (x) Q)_1 = P1Q0 + P0Q1; the second
  // factor's differential carries the super-sign (-1)^{|P-part|}.
  FreeModuleMap t1(T, a0 * b0 + a1 * b1, a1 * b0 + a0 * b1);
  t1.paste(p1.kron(id(b0)), 0, 0);
  t1.paste(id(a0).kron(q1), 0, a1 * b0);
  t1.paste(-id(a1).kron(q0), a0 * b0, 0);
  t1.paste(p0.kron(id(b1)), a0 * b0, a1 * b0);
  FreeModuleMap t0(T, a1 * b0 + a0 * b1, a0 * b0 + a1 * b1);
  t0.paste(p0.kron(id(b0)), 0, 0);
  t0.paste(-id(a1).kron(q1), 0, a0 * b0);
  t0.paste(id(a0).kron(q0), a1 * b0, 0);
  t0.paste(p1.kron(id(b1)), a1 * b0, a0 * b0);

  MatrixFactorization R =
      make_mf(T, std::move(W), std::move(t1), std::move(t0));
  verify(R, opts);
  return R;
}

ModulePresentation cokernel(const MatrixFactorization &P,
                            const GbOptions &opts) {
  RingPtr Rq = with_relations(
      P.ring, {Polynomial::from_terms(P.ring, P.W.terms())});
  ModulePresentation pres;
  pres.ring = Rq;
  pres.generators = P.rank_even();
  pres.relations = P.p1.map_entries(Rq, [&](const Polynomial &p) {
    return reduce_mod_ring(transport(p, Rq), opts);
  });
  return pres;
}

} // namespace mfk
