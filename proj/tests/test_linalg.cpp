#include <doctest.h>

#include <random>

#include "minorbit/linalg.hpp"

using namespace minorbit;

TEST_CASE("row_reduce") {
  RatMatrix zero(3, std::vector<Rat>(4, Rat(0)));
  CHECK(row_reduce(zero) == 0);

  RatMatrix id(3, std::vector<Rat>(3, Rat(0)));
  for (int i = 0; i < 3; ++i) id[i][i] = Rat(1);
  RatMatrix id2 = id;
  CHECK(row_reduce(id2) == 3);
  CHECK(id2 == id);

  RatMatrix m = {{frac(1), frac(2), frac(3)},
                 {frac(2), frac(4), frac(6)},
                 {frac(1), frac(0), frac(1)}};
  CHECK(row_reduce(m) == 2);
}

TEST_CASE("nullspace") {
  RatMatrix m = {{frac(1), frac(1), frac(0)}, {frac(0), frac(0), frac(1)}};
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  for (const auto& row : m) {
    Rat dot(0);
    for (size_t i = 0; i < row.size(); ++i) dot += row[i] * basis[0][i];
    CHECK(is_zero(dot));
  }
}

TEST_CASE("solve_linear over the fraction field") {
  Vars v = make_vars({"t1", "t2"});
  Poly t1 = Poly::variable(v, 0), t2 = Poly::variable(v, 1);
  auto rf = [&](const Poly& p) { return RatFunc(p); };

  // identity
  std::vector<std::vector<RatFunc>> a = {
      {rf(Poly::constant(v, frac(1))), RatFunc::zero(v)},
      {RatFunc::zero(v), rf(Poly::constant(v, frac(1)))}};
  std::vector<RatFunc> b = {rf(t1 + t2), rf(t1 * t2)};
  auto x = solve_linear(a, b);
  CHECK(x == b);

  // diagonal
  a = {{rf(t1), RatFunc::zero(v)}, {RatFunc::zero(v), rf(t2)}};
  b = {rf(t1), rf(t2)};
  x = solve_linear(a, b);
  CHECK(x[0] == rf(Poly::constant(v, frac(1))));
  CHECK(x[1] == rf(Poly::constant(v, frac(1))));

  // random systems: the solution re-substituted satisfies A x = b exactly
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ci(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n, RatFunc::zero(v)));
    std::vector<RatFunc> rhs(n, RatFunc::zero(v));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Poly p = t1.scaled(frac(ci(rng))) + t2.scaled(frac(ci(rng))) +
                 Poly::constant(v, frac(ci(rng)));
        m[i][j] = rf(p);
      }
      rhs[i] = rf(t1.scaled(frac(ci(rng))) + Poly::constant(v, frac(ci(rng))));
    }
    std::vector<RatFunc> sol;
    try {
      sol = solve_linear(m, rhs);
    } catch (const SolveError&) {
      continue;  // singular draw
    }
    for (int i = 0; i < n; ++i) {
      RatFunc acc = RatFunc::zero(v);
      for (int j = 0; j < n; ++j) acc = acc + m[i][j] * sol[j];
      CHECK(acc == rhs[i]);
    }
  }

  // singular matrix reports its rank defect
  a = {{rf(t1), rf(t1)}, {rf(t1), rf(t1)}};
  b = {rf(t1), rf(t2)};
  CHECK_THROWS_AS(static_cast<void>(solve_linear(a, b)), SolveError);
}

TEST_CASE("poly determinant and Cramer solve") {
  Vars v = make_vars({"t1", "t2"});
  Poly t1 = Poly::variable(v, 0), t2 = Poly::variable(v, 1);
  std::vector<std::vector<Poly>> m = {{t1, Poly::constant(v, frac(1))},
                                      {Poly::constant(v, frac(0)), t2}};
  CHECK(poly_det(m) == t1 * t2);
  auto x = solve_cramer_poly(m, {t1 * t2 + t2, t2 * t2});
  CHECK(x[0] == t2);
  CHECK(x[1] == t2);

  // a non-polynomial solution is a hard error
  std::vector<std::vector<Poly>> bad = {{t1, Poly::zero(v)},
                                        {Poly::zero(v), t2}};
  CHECK_THROWS_AS(
      static_cast<void>(solve_cramer_poly(bad, {t2, t1})), SolveError);
}
