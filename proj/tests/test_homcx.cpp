#include "helpers.hpp"

using namespace th;

TEST_SUITE("homcx") {

TEST_CASE("hom-complex differentials square to zero and match the layout") {
  auto R = qring({"x"});
  MatrixFactorization P = koszul_stab(pp("x^3", R));
  HomComplex H = hom_complex(P, P);
  CHECK(H.even_rank == 2);
  CHECK(H.odd_rank == 2);
  CHECK((H.d_odd * H.d_even).is_zero());
  CHECK((H.d_even * H.d_odd).is_zero());

  // flatten/unflatten round trip preserves the blocks
  CurvedMap id = identity_map(P);
  ModuleElem v = flatten_map(id);
  REQUIRE(v.rank() == 2);
  CHECK(v.comp[0] == pp("1", R));
  CHECK(v.comp[1] == pp("1", R));
  CurvedMap back = unflatten_map(P, P, 0, v);
  CHECK(back.a == id.a);
  CHECK(back.b == id.b);
}

TEST_CASE("identity is a cocycle; its differential image is not new") {
  auto R = qring({"x"});
  MatrixFactorization P = koszul_stab(pp("x^2", R));
  CHECK(is_cocycle(identity_map(P)));
  // an arbitrary even map need not be closed
  CurvedMap f = make_curved_map(P, P, 0, mat(R, {{"x"}}), mat(R, {{"0"}}));
  CHECK_FALSE(is_cocycle(f));
}

TEST_CASE("self-ext of the residue field on the A_1 chart") {
  auto R = qring({"x"});
  ExtResult e = ext(koszul_stab(pp("x^2", R)), koszul_stab(pp("x^2", R)));
  // even cocycles are the diagonal pairs (f, f); coboundaries are (x)*(1,1),
  // so each parity contributes Q[x]/(x): dims (1, 1)
  CHECK(e.even_dim == fin(1));
  CHECK(e.odd_dim == fin(1));
}

TEST_CASE("self-ext of the residue field is (1,1) for every A_m chart") {
  auto R = qring({"x"});
  for (int m = 2; m <= 4; ++m) {
    MatrixFactorization P =
        koszul_stab(Polynomial::variable(R, 0).pow(uint32_t(m)));
    ExtResult e = ext(P, P);
    CHECK(e.even_dim == fin(1));
    CHECK(e.odd_dim == fin(1));
  }
}

TEST_CASE("self-ext for two-variable potentials") {
  auto R = qring({"x", "y"});
  // the node object ([x],[y]) presents the branch module Q[y], which is
  // rigid: odd cocycles (g,h) with x g + y h = 0 are exactly the
  // coboundaries (y v, -x v)
  ExtResult node = ext(koszul_stab(pp("x*y", R)), koszul_stab(pp("x*y", R)));
  CHECK(node.even_dim == fin(1));
  CHECK(node.odd_dim == fin(0));

  ExtResult quad =
      ext(koszul_stab(pp("x^2+y^2", R)), koszul_stab(pp("x^2+y^2", R)));
  // Clifford pattern for the rank (2,2) stabilization
  CHECK(quad.even_dim == fin(2));
  CHECK(quad.odd_dim == fin(2));
}

TEST_CASE("ext against the shift swaps parities") {
  auto R = qring({"x"});
  MatrixFactorization P = koszul_stab(pp("x^4", R));
  ExtResult plain = ext(P, P);
  ExtResult shifted = ext(P, shift(P));
  CHECK(plain.even_dim == shifted.odd_dim);
  CHECK(plain.odd_dim == shifted.even_dim);
}

TEST_CASE("ext dimensions are invariant under dualizing both arguments") {
  auto R = qring({"x", "y"});
  MatrixFactorization P = koszul_stab(pp("x^3+y^3", R));
  MatrixFactorization Q = shift(P);
  ExtResult pq = ext(P, Q);
  ExtResult dd = ext(dual(Q), dual(P));
  CHECK(pq.even_dim == dd.even_dim);
  CHECK(pq.odd_dim == dd.odd_dim);
}

TEST_CASE("curvature mismatch is refused") {
  auto R = qring({"x"});
  MatrixFactorization P = koszul_stab(pp("x^2", R));
  MatrixFactorization Q = koszul_stab(pp("x^3", R));
  CHECK_THROWS_AS(hom_complex(P, Q), MfError);
}

TEST_CASE("the odd generator of End(k_stab(x^2)) squares to plus identity") {
  auto R = qring({"x"});
  MatrixFactorization P = koszul_stab(pp("x^2", R));
  // theta = (g, h) with g = id, h = -id is closed: x*1 + (-1)*x = 0
  CurvedMap theta = make_curved_map(P, P, 1, mat(R, {{"1"}}), mat(R, {{"-1"}}));
  REQUIRE(is_cocycle(theta));
  CurvedMap sq = compose(theta, theta);
  CHECK(sq.parity == 0);
  CHECK(sq.a == mat(R, {{"1"}}));
  CHECK(sq.b == mat(R, {{"1"}}));

  // composing with a non-cocycle is refused
  CurvedMap junk = make_curved_map(P, P, 0, mat(R, {{"x"}}), mat(R, {{"0"}}));
  CHECK_THROWS_AS(compose(theta, junk), MfError);
}

TEST_CASE("composition matches matrix products on even maps") {
  auto R = qring({"x"});
  MatrixFactorization P = koszul_stab(pp("x^3", R));
  CurvedMap two = make_curved_map(P, P, 0, mat(R, {{"2"}}), mat(R, {{"2"}}));
  CurvedMap four = compose(two, two);
  CHECK(four.a == mat(R, {{"4"}}));
  CHECK(four.b == mat(R, {{"4"}}));
}

} // TEST_SUITE
