#include "helpers.hpp"

#include <random>

using namespace th;

TEST_SUITE("stabilization") {

TEST_CASE("koszul_stab pinned matrices for one decomposition pair") {
  auto R = qring({"x"});
  MatrixFactorization a1 = koszul_stab(pp("x^2", R));
  CHECK(a1.p1.to_literals() == std::vector<std::vector<std::string>>{{"x"}});
  CHECK(a1.p0.to_literals() == std::vector<std::vector<std::string>>{{"x"}});

  MatrixFactorization a2 = koszul_stab(pp("x^3", R));
  CHECK(a2.p1.to_literals() == std::vector<std::vector<std::string>>{{"x"}});
  CHECK(a2.p0.to_literals() == std::vector<std::vector<std::string>>{{"x^2"}});

  auto R2 = qring({"x", "y"});
  MatrixFactorization node = koszul_stab(pp("x*y", R2));
  CHECK(node.p1.to_literals() == std::vector<std::vector<std::string>>{{"x"}});
  CHECK(node.p0.to_literals() == std::vector<std::vector<std::string>>{{"y"}});
}

TEST_CASE("koszul_stab verifies across the whole suite") {
  auto R1 = qring({"x"});
  auto R2 = qring({"x", "y"});
  for (const auto &[lit, ring] :
       std::vector<std::pair<std::string, RingPtr>>{{"x^2", R1},
                                                    {"x^3", R1},
                                                    {"x^4", R1},
                                                    {"x*y", R2},
                                                    {"x^2+y^2", R2},
                                                    {"x^3+y^3", R2}}) {
    MatrixFactorization P = koszul_stab(pp(lit, ring));
    CHECK_NOTHROW(verify(P));
  }
  // rank is 2^(pairs-1) on each side
  CHECK(koszul_stab(pp("x^2+y^2", R2)).rank_even() == 2);
  CHECK(koszul_stab(pp("x*y", R2)).rank_even() == 1);
}

TEST_CASE("koszul_factorization on random regular-ish data") {
  auto R = qring({"x", "y", "z"});
  std::mt19937 rng(77001);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<Polynomial> gens, coeffs;
    Polynomial W = Polynomial::zero(R);
    for (size_t i = 0; i < 3; ++i) {
      gens.push_back(Polynomial::variable(R, i));
      Polynomial w = Polynomial::constant(R, c(rng));
      for (size_t v = 0; v < 3; ++v)
        w += Polynomial::variable(R, v).scaled(c(rng));
      coeffs.push_back(w);
      W += gens.back() * coeffs.back();
    }
    MatrixFactorization P = koszul_factorization(R, W, gens, coeffs);
    CHECK(P.rank_even() == 4);
    CHECK(P.rank_odd() == 4);
    CHECK_NOTHROW(verify(P));
  }
  CHECK_THROWS_AS(koszul_factorization(R, Polynomial::zero(R),
                                       {Polynomial::variable(R, 0)}, {}),
                  MfError);
}

TEST_CASE("constant term is rejected") {
  auto R = qring({"x"});
  CHECK_THROWS_AS(koszul_stab(pp("x^2+1", R)), MfError);
}

TEST_CASE("stabilize reproduces koszul_stab on one-variable input") {
  auto R = qring({"x"});
  for (int m = 2; m <= 4; ++m) {
    Polynomial W = Polynomial::variable(R, 0).pow(uint32_t(m));
    RingPtr B = with_relations(R, {W});
    ModulePresentation F{B, 1, mat(B, {{"x"}})};
    MatrixFactorization S = stabilize(F, mat(R, {{"x"}}));
    MatrixFactorization K = koszul_stab(W);
    CHECK(S.p1.to_literals() == K.p1.to_literals());
    CHECK(S.p0.to_literals() == K.p0.to_literals());
  }
}

TEST_CASE("stabilize error paths") {
  auto R = qring({"x"});
  Polynomial W = pp("x^3", R);
  RingPtr B = with_relations(R, {W});

  // presentation over the wrong ring
  ModulePresentation wrong{R, 1, mat(R, {{"x"}})};
  CHECK_THROWS_AS(stabilize(wrong, mat(R, {{"x"}})), MfError);

  // q1 does not present the same module as F
  ModulePresentation other{B, 1, mat(B, {{"x^2"}})};
  try {
    stabilize(other, mat(R, {{"x"}}));
    FAIL("expected PresentationMismatch");
  } catch (const MfError &e) {
    CHECK(e.kind() == ErrorKind::PresentationMismatch);
  }

  // W*id does not factor through x^3 over Q[x] when W = x^2
  Polynomial W2 = pp("x^2", R);
  RingPtr B2 = with_relations(R, {W2});
  ModulePresentation free_mod{B2, 1, mat(B2, {{"x^3"}})};
  try {
    stabilize(free_mod, mat(R, {{"x^3"}}));
    FAIL("expected LiftFailed");
  } catch (const MfError &e) {
    CHECK(e.kind() == ErrorKind::LiftFailed);
  }
}

TEST_CASE("product ring doubles the variables deterministically") {
  auto R = qring({"x", "y"});
  RingPtr prod = product_ring(R);
  CHECK(prod->vars() == std::vector<std::string>{"x1", "x2", "y1", "y2"});
  CHECK_THROWS_AS(product_ring(with_relations(R, {pp("x*y", R)})), MfError);
}

TEST_CASE("difference quotients telescope the potential difference") {
  std::mt19937 rng(77002);
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<uint32_t> d(0, 5);
  for (size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> vars;
    for (size_t i = 0; i < n; ++i)
      vars.push_back("x" + std::to_string(i + 1));
    auto R = qring(vars);
    RingPtr prod = product_ring(R);
    for (int iter = 0; iter < 5; ++iter) {
      Polynomial W = Polynomial::zero(R);
      for (int t = 0; t < 5; ++t) {
        Polynomial term = Polynomial::constant(R, c(rng));
        for (size_t v = 0; v < n; ++v)
          term = term * Polynomial::variable(R, v).pow(d(rng));
        W += term;
      }
      std::vector<Polynomial> q = difference_quotients(W, prod);
      REQUIRE(q.size() == n);
      std::vector<int> first(n), second(n);
      for (size_t i = 0; i < n; ++i) {
        first[i] = int(i);
        second[i] = int(n + i);
      }
      Polynomial diff = promote_with_map(W, prod, first) -
                        promote_with_map(W, prod, second);
      Polynomial acc = Polynomial::zero(prod);
      for (size_t i = 0; i < n; ++i)
        acc += (Polynomial::variable(prod, i) -
                Polynomial::variable(prod, n + i)) *
               q[i];
      CHECK(acc == diff);
    }
  }
}

TEST_CASE("diagonal_mf pinned for the quadratic and cubic potentials") {
  auto R = qring({"x"});
  MatrixFactorization d2 = diagonal_mf(pp("x^2", R));
  CHECK(d2.ring->vars() == std::vector<std::string>{"x1", "y1"});
  CHECK(d2.p1.to_literals() ==
        std::vector<std::vector<std::string>>{{"x1 - y1"}});
  CHECK(d2.p0.to_literals() ==
        std::vector<std::vector<std::string>>{{"x1 + y1"}});
  CHECK(d2.W == pp("x1^2 - y1^2", d2.ring));
  CHECK_NOTHROW(verify(d2));

  MatrixFactorization d3 = diagonal_mf(pp("x^3", R));
  CHECK(d3.p0.to_literals() ==
        std::vector<std::vector<std::string>>{{"x1^2 + x1*y1 + y1^2"}});
  CHECK_NOTHROW(verify(d3));

  auto R2 = qring({"x", "y"});
  MatrixFactorization dq = diagonal_mf(pp("x^2+y^2", R2));
  CHECK(dq.ring->arity() == 4);
  CHECK(dq.rank_even() == 2);
  CHECK_NOTHROW(verify(dq));
}

TEST_CASE("diagonal cokernel presents the diagonal copy of the chart ring") {
  auto R = qring({"x"});
  MatrixFactorization d3 = diagonal_mf(pp("x^3", R));
  ModulePresentation c = cokernel(d3);
  // coker = (product ring modulo W~) / (x1 - y1) = Q[x1], infinite over Q
  CHECK(q_dimension(c) == inf());
  CHECK(q_dimension_at_origin(c) == fin(1));
}

} // TEST_SUITE
