#include "helpers.hpp"

using namespace th;

namespace {

MatrixFactorization kstab_of(const std::string &w, const RingPtr &R) {
  return koszul_stab(pp(w, R));
}

} // namespace

TEST_SUITE("curved") {

TEST_CASE("make_mf checks shapes, verify checks curvature") {
  auto R = qring({"x"});
  Polynomial W = pp("x^2", R);
  // mismatched inner dimensions rejected at construction
  CHECK_THROWS_AS(make_mf(R, W, mat(R, {{"x", "0"}}), mat(R, {{"x", "0"}})),
                  MfError);
  // wrong curvature passes construction, fails verify with the entry named
  MatrixFactorization bad = make_mf(R, W, mat(R, {{"x"}}), mat(R, {{"x^2"}}));
  try {
    verify(bad);
    FAIL("expected CurvatureMismatch");
  } catch (const MfError &e) {
    CHECK(e.kind() == ErrorKind::CurvatureMismatch);
    CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
    CHECK(error_exit_code(e.kind()) == 1);
  }
  MatrixFactorization good = make_mf(R, W, mat(R, {{"x"}}), mat(R, {{"x"}}));
  CHECK_NOTHROW(verify(good));
}

TEST_CASE("verify works modulo the ring relations") {
  auto A = qring({"x"});
  auto B = with_relations(A, {pp("x^3", A)});
  // over Q[x]/(x^3) the pair (x, x) factors W = x^2 only up to x^3: it does
  // not, but (x^2, x) factors x^3 = 0
  MatrixFactorization M =
      make_mf(B, Polynomial::zero(B), mat(B, {{"x^2"}}), mat(B, {{"x"}}));
  CHECK_NOTHROW(verify(M));
}

TEST_CASE("shift swaps the pieces and is an involution") {
  auto R = qring({"x"});
  MatrixFactorization P = kstab_of("x^3", R);
  MatrixFactorization S = shift(P);
  CHECK(S.rank_even() == P.rank_odd());
  CHECK(S.p1 == -P.p0);
  CHECK(S.p0 == -P.p1);
  CHECK_NOTHROW(verify(S));
  MatrixFactorization SS = shift(S);
  CHECK(SS.p1 == P.p1);
  CHECK(SS.p0 == P.p0);
}

TEST_CASE("dual negates curvature and is an exact involution") {
  auto R = qring({"x", "y"});
  MatrixFactorization P = kstab_of("x^2+y^2", R);
  MatrixFactorization D = dual(P);
  CHECK(D.W == -P.W);
  CHECK_NOTHROW(verify(D));
  MatrixFactorization DD = dual(D);
  CHECK(DD.W == P.W);
  CHECK(DD.p1 == P.p1);
  CHECK(DD.p0 == P.p0);
}

TEST_CASE("cone of a closed map is a factorization; cone(id) is trivial") {
  auto R = qring({"x"});
  MatrixFactorization P = kstab_of("x^4", R);
  MatrixFactorization C = cone(identity_map(P));
  CHECK(C.rank_even() == 2);
  CHECK(C.rank_odd() == 2);
  CHECK_NOTHROW(verify(C));
  // contractibility shows up as vanishing self-Ext
  ExtResult e = ext(C, C);
  CHECK(e.even_dim == fin(0));
  CHECK(e.odd_dim == fin(0));

  // a non-cocycle is rejected
  CurvedMap junk = make_curved_map(P, P, 0, mat(R, {{"x"}}), mat(R, {{"0"}}));
  CHECK_THROWS_AS(cone(junk), MfError);
}

TEST_CASE("direct_sum is block diagonal") {
  auto R = qring({"x"});
  MatrixFactorization P = kstab_of("x^2", R);
  MatrixFactorization Q = kstab_of("x^2", R);
  MatrixFactorization S = direct_sum(P, Q);
  CHECK(S.rank_even() == 2);
  CHECK(S.rank_odd() == 2);
  CHECK_NOTHROW(verify(S));
  CHECK(S.p1.at(0, 1).is_zero());
  CHECK(S.p1.at(1, 0).is_zero());
}

TEST_CASE("external tensor adds curvatures over the joined ring") {
  auto Rx = qring({"x"});
  auto Ry = qring({"y"});
  MatrixFactorization P = kstab_of("x^2", Rx);
  MatrixFactorization N = kstab_of("-y^2", Ry);
  MatrixFactorization T = external_tensor(P, N);
  CHECK(T.ring->arity() == 2);
  CHECK(T.W == pp("x^2 - y^2", T.ring));
  CHECK(T.rank_even() == 2);
  CHECK(T.rank_odd() == 2);
  CHECK_NOTHROW(verify(T));
  // shared variable names are refused
  CHECK_THROWS_AS(external_tensor(P, kstab_of("x^3", Rx)), MfError);
}

TEST_CASE("cokernel presents coker(p1) over the hypersurface ring") {
  auto R = qring({"x"});
  MatrixFactorization P = kstab_of("x^2", R);
  ModulePresentation c = cokernel(P);
  CHECK(c.ring->relation_count() == 1);
  // coker([x]) over Q[x]/(x^2) is the residue field
  CHECK(q_dimension(c) == fin(1));
  CHECK(q_dimension_at_origin(c) == fin(1));

  // cone(id) has free cokernel of rank 1 after minimization
  ModulePresentation cc = minimize_presentation(cokernel(cone(identity_map(P))));
  CHECK(q_dimension(cc) == fin(2));
}

} // TEST_SUITE
