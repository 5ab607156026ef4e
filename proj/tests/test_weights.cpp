#include <doctest.h>

#include <random>

#include "minorbit/weights.hpp"

using namespace minorbit;

namespace {

Weight two_theta(const RootSystem& rs) {
  return weight_add(rs.highest_root(), rs.highest_root());
}

}  // namespace

TEST_CASE("zero weight multiplicity of V(2theta)") {
  for (int n = 1; n <= 6; ++n) {
    auto rs = RootSystem::build(LieType::make(Family::A, n));
    CHECK(zero_weight_multiplicity(rs, two_theta(rs)) == n * (n + 1) / 2);
  }
  for (int n = 4; n <= 6; ++n) {
    auto rs = RootSystem::build(LieType::make(Family::D, n));
    CHECK(zero_weight_multiplicity(rs, two_theta(rs)) == n * (n - 1));
  }
  auto e6 = RootSystem::build(LieType::parse("E6"));
  CHECK(zero_weight_multiplicity(e6, two_theta(e6)) == 36);
}

TEST_CASE("V(theta) is the adjoint module") {
  for (const char* name : {"A3", "D4", "E6"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    auto t = freudenthal_table(rs, rs.highest_root());
    CHECK(t.mult_dominant(Weight(rs.rank(), 0)) == rs.rank());
    CHECK(table_total_dim(rs, t) == rs.dim_g());
    CHECK(weyl_dim(rs, rs.highest_root()) == rs.dim_g());
  }
  // rank 1: V(2theta) is the five-dimensional module
  auto a1 = RootSystem::build(LieType::parse("A1"));
  auto t = freudenthal_table(a1, two_theta(a1));
  CHECK(t.mult_dominant({0}) == 1);
  CHECK(table_total_dim(a1, t) == 5);
}

TEST_CASE("table dimension equals the Weyl dimension formula") {
  for (const char* name : {"A2", "A4", "D4", "D5", "E6"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    auto t = freudenthal_table(rs, two_theta(rs));
    CHECK(table_total_dim(rs, t) == weyl_dim(rs, two_theta(rs)));
  }
}

TEST_CASE("multiplicities are Weyl invariant") {
  auto rs = RootSystem::build(LieType::parse("A3"));
  auto t = freudenthal_table(rs, two_theta(rs));
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(t.dominant.size()) - 1);
  for (int trial = 0; trial < 50; ++trial) {
    Weight mu = t.dominant[pick(rng)].first;
    // walk to a random chamber image by a few reflections
    Weight w = mu;
    for (int step = 0; step < 5; ++step) {
      int i = rng() % rs.rank();
      long ip = rs.inner(w, rs.simple_root(i));
      Weight r = rs.simple_root(i);
      for (int k = 0; k < rs.rank(); ++k) w[k] -= static_cast<int>(ip) * r[k];
    }
    CHECK(table_mult(rs, t, w) == t.mult_dominant(mu));
  }
}

TEST_CASE("dim identities") {
  // dim I^2_0 = dim Sym^2(h) for every type computed
  for (const char* name : {"A1", "A3", "D4", "E6"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    const int n = rs.rank();
    CHECK(dim_i2_zero(rs) == n * (n + 1) / 2);
  }
  // E6: (78-6)/2 + 21 - 36 = 21
  auto e6 = RootSystem::build(LieType::parse("E6"));
  CHECK(e6.dim_g() == 78);
  CHECK(dim_i2_zero(e6) == 21);
}

TEST_CASE("weyl group and orbit sizes") {
  auto d4 = RootSystem::build(LieType::parse("D4"));
  CHECK(weyl_group_order(d4) == 192);
  CHECK(orbit_size(d4, Weight{0, 0, 0, 0}) == 1);
  // the root orbit of D4 has 24 elements
  CHECK(orbit_size(d4, d4.highest_root()) == 24);
  auto e6 = RootSystem::build(LieType::parse("E6"));
  CHECK(weyl_group_order(e6) == 51840);
  CHECK(orbit_size(e6, e6.highest_root()) == 72);
}

TEST_CASE("freudenthal rejects non-dominant input") {
  auto rs = RootSystem::build(LieType::parse("A2"));
  CHECK_THROWS(static_cast<void>(freudenthal_table(rs, Weight{1, 0})));
  CHECK_THROWS(static_cast<void>(freudenthal_table(rs, Weight{-1, 1})));
}
