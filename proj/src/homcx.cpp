#include "homcx.hpp"

namespace mfk {

static void require_comparable(const MatrixFactorization &P,
                               const MatrixFactorization &Q,
                               const GbOptions &opts) {
  require_same_ring(P.ring, Q.ring, "hom_complex");
  if (!reduce_mod_ring(P.W - Q.W, opts).is_zero())
    fail(ErrorKind::CurvatureMismatch,
         "hom_complex: curvatures differ (" + P.W.to_string() + " vs " +
             Q.W.to_string() + ")");
}

// vec(A X B) = (B^t kron A) vec(X) for column-major vec.
static FreeModuleMap left_mul(const FreeModuleMap &A, size_t src_cols) {
  return FreeModuleMap::identity(A.ring(), src_cols).kron(A);
}
static FreeModuleMap right_mul(const FreeModuleMap &B, size_t dst_rows) {
  return B.transpose().kron(FreeModuleMap::identity(B.ring(), dst_rows));
}

HomComplex hom_complex(const MatrixFactorization &P,
                       const MatrixFactorization &Q, const GbOptions &opts) {
  require_comparable(P, Q, opts);
  const RingPtr &R = P.ring;
  size_t a0 = P.rank_even(), a1 = P.rank_odd();
  size_t b0 = Q.rank_even(), b1 = Q.rank_odd();

  HomComplex H;
  H.source = P;
  H.target = Q;
  H.even_rank = a0 * b0 + a1 * b1;
  H.odd_rank = a0 * b1 + a1 * b0;

  // del(f0, f1) = (q0 f0 - f1 p0, q1 f1 - f0 p1)
  H.d_even = FreeModuleMap(R, H.odd_rank, H.even_rank);
  H.d_even.paste(left_mul(Q.p0, a0), 0, 0);
  H.d_even.paste(-right_mul(P.p0, b1), 0, a0 * b0);
  H.d_even.paste(-right_mul(P.p1, b0), a0 * b1, 0);
  H.d_even.paste(left_mul(Q.p1, a1), a0 * b1, a0 * b0);

  // del(g, h) = (q1 g + h p0, q0 h + g p1)
  H.d_odd = FreeModuleMap(R, H.even_rank, H.odd_rank);
  H.d_odd.paste(left_mul(Q.p1, a0), 0, 0);
  H.d_odd.paste(right_mul(P.p0, b0), 0, a0 * b1);
  H.d_odd.paste(right_mul(P.p1, b1), a0 * b0, 0);
  H.d_odd.paste(left_mul(Q.p0, a1), a0 * b0, a0 * b1);

  auto check_zero = [&](const FreeModuleMap &m, const char *which) {
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j)
        if (!reduce_mod_ring(m.at(i, j), opts).is_zero())
          fail(ErrorKind::CurvatureMismatch,
               std::string("hom_complex: ") + which +
                   " does not vanish at (" + std::to_string(i) + "," +
                   std::to_string(j) + "); factorizations do not verify");
    return true;
  };
  check_zero(H.d_odd * H.d_even, "d_odd * d_even");
  check_zero(H.d_even * H.d_odd, "d_even * d_odd");
  return H;
}

ExtResult ext(const MatrixFactorization &P, const MatrixFactorization &Q,
              const GbOptions &opts) {
  HomComplex H = hom_complex(P, Q, opts);
  ExtResult r;
  r.even = minimize_presentation(homology(H.d_odd, H.d_even, opts));
  r.odd = minimize_presentation(homology(H.d_even, H.d_odd, opts));
  r.even_dim = q_dimension(r.even, opts);
  r.odd_dim = q_dimension(r.odd, opts);
  return r;
}

static void vec_into(const FreeModuleMap &m, ModuleElem &out, size_t offset) {
  for (size_t j = 0; j < m.cols(); ++j)
    for (size_t i = 0; i < m.rows(); ++i)
      out.comp[offset + j * m.rows() + i] = m.at(i, j);
}

static FreeModuleMap unvec(const RingPtr &ring, const ModuleElem &v,
                           size_t offset, size_t rows, size_t cols) {
  FreeModuleMap m(ring, rows, cols);
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < rows; ++i)
      m.at(i, j) = v.comp[offset + j * rows + i];
  return m;
}

ModuleElem flatten_map(const CurvedMap &f) {
  ModuleElem out(f.source.ring,
                 f.a.rows() * f.a.cols() + f.b.rows() * f.b.cols());
  vec_into(f.a, out, 0);
  vec_into(f.b, out, f.a.rows() * f.a.cols());
  return out;
}

CurvedMap unflatten_map(const MatrixFactorization &P,
                        const MatrixFactorization &Q, int parity,
                        const ModuleElem &coords) {
  size_t a0 = P.rank_even(), a1 = P.rank_odd();
  size_t b0 = Q.rank_even(), b1 = Q.rank_odd();
  size_t ar = parity == 0 ? b0 : b1; // f.a : P0 -> Q_{parity}
  size_t br = parity == 0 ? b1 : b0;
  if (coords.rank() != ar * a0 + br * a1)
    fail(ErrorKind::ShapeMismatch,
         "unflatten_map: expected " + std::to_string(ar * a0 + br * a1) +
             " coordinates, got " + std::to_string(coords.rank()));
  FreeModuleMap a = unvec(P.ring, coords, 0, ar, a0);
  FreeModuleMap b = unvec(P.ring, coords, ar * a0, br, a1);
  return make_curved_map(P, Q, parity, std::move(a), std::move(b));
}

static bool vanishes(const FreeModuleMap &m, const GbOptions &opts) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!reduce_mod_ring(m.at(i, j), opts).is_zero())
        return false;
  return true;
}

bool is_cocycle(const CurvedMap &f, const GbOptions &opts) {
  const MatrixFactorization &P = f.source, &Q = f.target;
  if (f.parity == 0)
    return vanishes(Q.p0 * f.a - f.b * P.p0, opts) &&
           vanishes(Q.p1 * f.b - f.a * P.p1, opts);
  return vanishes(Q.p1 * f.a + f.b * P.p0, opts) &&
         vanishes(Q.p0 * f.b + f.a * P.p1, opts);
}

CurvedMap compose(const CurvedMap &a, const CurvedMap &b,
                  const GbOptions &opts) {
  require_same_ring(a.source.ring, b.source.ring, "compose");
  if (!(b.target.p1 == a.source.p1) || !(b.target.p0 == a.source.p0))
    fail(ErrorKind::ShapeMismatch,
         "compose: inner factorizations disagree (target of the second "
         "argument must be the source of the first)");
  if (!is_cocycle(a, opts) || !is_cocycle(b, opts))
    fail(ErrorKind::NotClosed, "compose: arguments must be cocycles");

  int parity = (a.parity + b.parity) % 2;
  FreeModuleMap ra, rb;
  if (a.parity == 0 && b.parity == 0) {
    ra = a.a * b.a; // P0 -> Q0 -> R0
    rb = a.b * b.b;
  } else if (a.parity == 0) {
    ra = a.b * b.a; // P0 -> Q1 -> R1
    rb = a.a * b.b;
  } else if (b.parity == 0) {
    ra = a.a * b.a; // P0 -> Q0 -> R1
    rb = a.b * b.b;
  } else {
    // odd after odd, with the Koszul sign
    ra = -(a.b * b.a); // P0 -> Q1 -> R0
    rb = -(a.a * b.b); // P1 -> Q0 -> R1
  }
  return make_curved_map(b.source, a.target, parity, std::move(ra),
                         std::move(rb));
}

} // namespace mfk
