#include <doctest.h>

#include "minorbit/rootsystem.hpp"

using namespace minorbit;

TEST_CASE("type validation") {
  CHECK_THROWS(static_cast<void>(LieType::parse("D3")));
  CHECK_THROWS(static_cast<void>(LieType::parse("E9")));
  CHECK_THROWS(static_cast<void>(LieType::parse("B2")));
  CHECK_THROWS(static_cast<void>(LieType::parse("A0")));
  CHECK(LieType::parse("E7").rank == 7);
}

TEST_CASE("positive root closure counts and data") {
  auto a2 = RootSystem::build(LieType::parse("A2"));
  REQUIRE(a2.num_positive_roots() == 3);
  CHECK(a2.is_positive_root({1, 0}));
  CHECK(a2.is_positive_root({0, 1}));
  CHECK(a2.is_positive_root({1, 1}));

  for (int n = 4; n <= 8; ++n) {
    auto d = RootSystem::build(LieType::make(Family::D, n));
    CHECK(d.num_positive_roots() == n * (n - 1));
  }
  CHECK(RootSystem::build(LieType::parse("E6")).num_positive_roots() == 36);
  CHECK(RootSystem::build(LieType::parse("E7")).num_positive_roots() == 63);
  CHECK(RootSystem::build(LieType::parse("E8")).num_positive_roots() == 120);

  auto e6 = RootSystem::build(LieType::parse("E6"));
  CHECK(e6.highest_root() == Weight{1, 2, 2, 3, 2, 1});
  auto e8 = RootSystem::build(LieType::parse("E8"));
  CHECK(e8.highest_root() == Weight{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("inner product normalization") {
  for (const char* name : {"A3", "D5", "E6"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    for (int i = 0; i < rs.rank(); ++i)
      CHECK(rs.inner(rs.simple_root(i), rs.simple_root(i)) == 2);
    CHECK(rs.inner(rs.highest_root(), rs.highest_root()) == 2);
    // every root has squared length 2
    for (const auto& r : rs.positive_roots()) CHECK(rs.inner(r, r) == 2);
  }
  for (int n = 1; n <= 6; ++n) {
    auto rs = RootSystem::build(LieType::make(Family::A, n));
    CHECK(rs.inner(rs.highest_root(), rs.two_delta()) == 2 * n);
  }
}

TEST_CASE("two_delta is the sum of the positive roots") {
  for (const char* name : {"A4", "D4", "E6"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    Weight sum(rs.rank(), 0);
    for (const auto& r : rs.positive_roots()) sum = weight_add(sum, r);
    CHECK(sum == rs.two_delta());
  }
}

TEST_CASE("dominance of the highest root") {
  for (const char* name : {"A5", "D6", "E7"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    for (const auto& r : rs.positive_roots()) {
      Weight diff = weight_sub(rs.highest_root(), r);
      for (int x : diff) CHECK(x >= 0);
    }
  }
}

TEST_CASE("is_root membership") {
  auto a2 = RootSystem::build(LieType::parse("A2"));
  CHECK(a2.is_root({1, 1}));
  CHECK(a2.is_root({-1, -1}));
  CHECK(!a2.is_root({2, 1}));
  auto d4 = RootSystem::build(LieType::parse("D4"));
  CHECK(d4.is_root({1, 2, 1, 1}));
  CHECK(!d4.is_root({1, 2, 2, 1}));
}

TEST_CASE("asymmetry function") {
  auto e6 = RootSystem::build(LieType::parse("E6"));
  auto eps = AsymmetryFunction::standard(e6);
  for (int i = 0; i < 6; ++i)
    CHECK(eps.eps(e6.simple_root(i), e6.simple_root(i)) == -1);
  // the fixed E6 orientation has the 3 -> 1 edge
  CHECK(eps.eps(e6.simple_root(2), e6.simple_root(0)) == -1);
  CHECK(eps.eps(e6.simple_root(0), e6.simple_root(2)) == 1);

  // bimultiplicativity
  Weight a = e6.simple_root(0), ap = e6.simple_root(2), b = e6.simple_root(3);
  CHECK(eps.eps(weight_add(a, ap), b) == eps.eps(a, b) * eps.eps(ap, b));

  // eps(a,b) eps(b,a) = (-1)^(a,b) on all pairs of roots, every type
  for (const char* name : {"A3", "D4", "E6", "E7", "E8"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    auto f = AsymmetryFunction::standard(rs);
    std::vector<Weight> all;
    for (const auto& r : rs.positive_roots()) {
      all.push_back(r);
      all.push_back(weight_neg(r));
    }
    long bad = 0;
    for (const auto& u : all)
      for (const auto& v : all) {
        int lhs = f.eps(u, v) * f.eps(v, u);
        int rhs = rs.inner(u, v) % 2 == 0 ? 1 : -1;
        if (lhs != rhs) ++bad;
      }
    CHECK(bad == 0);
  }

  // orientation overrides must cover the diagram
  auto a2 = RootSystem::build(LieType::parse("A2"));
  CHECK_THROWS(static_cast<void>(AsymmetryFunction::from_edges(a2, {})));
  CHECK_THROWS(static_cast<void>(AsymmetryFunction::from_edges(a2, {{0, 1}, {1, 0}})));
  auto rev = AsymmetryFunction::from_edges(a2, {{1, 0}});
  CHECK(rev.eps(a2.simple_root(1), a2.simple_root(0)) == -1);
}
