#include <doctest.h>

#include "minorbit/cohomology.hpp"
#include "minorbit/reference_tables.hpp"

using namespace minorbit;

namespace {

RingElement basis_elt(int n, const Vars& v, int i) {
  RingElement e = ring_element_zero(n, v);
  e.c[i] = Poly::constant(v, Rat(1));
  return e;
}

RingElement unit_elt(int n, const Vars& v) {
  RingElement e = ring_element_zero(n, v);
  e.c0 = Poly::constant(v, Rat(1));
  return e;
}

}  // namespace

TEST_CASE("fixed point data") {
  const int n = 4;
  auto d = an_fixed_point_data(n);
  Poly t1 = Poly::variable(d.vars, 0), t2 = Poly::variable(d.vars, 1);
  CHECK(d.tangent_euler[0] ==
        t1.scaled(frac(n + 1)) * (t2 - t1.scaled(frac(n))));
  for (int j = 1; j <= n; ++j) {
    CHECK(d.restrictions[j - 1][j - 1] ==
          t1.scaled(frac(n - j + 2)) - t2.scaled(frac(j - 1)));
    CHECK(d.restrictions[j][j - 1] ==
          t2.scaled(frac(j + 1)) - t1.scaled(frac(n - j)));
    for (int k = 0; k <= n; ++k)
      if (k != j - 1 && k != j) CHECK(d.restrictions[k][j - 1].is_zero());
  }
}

TEST_CASE("equivariant pairing") {
  for (int n = 1; n <= 6; ++n) {
    auto d = an_fixed_point_data(n);
    Poly t1 = Poly::variable(d.vars, 0), t2 = Poly::variable(d.vars, 1);
    RingElement one = unit_elt(n, d.vars);
    RatFunc p11 = an_pairing(d, one, one);
    CHECK(p11 == RatFunc(Poly::constant(d.vars, Rat(1)),
                         (t1 * t2).scaled(frac(n + 1))));
    auto rs = RootSystem::build(LieType::make(Family::A, n));
    for (int i = 0; i < n; ++i) {
      CHECK(an_pairing(d, one, basis_elt(n, d.vars, i)).is_zero());
      for (int j = 0; j < n; ++j) {
        RatFunc g = an_pairing(d, basis_elt(n, d.vars, i), basis_elt(n, d.vars, j));
        // gram matrix equals minus the Cartan matrix
        CHECK(g == RatFunc::constant(d.vars, frac(-rs.cartan()[i][j])));
      }
    }
  }
}

TEST_CASE("localization table equals the closed forms") {
  for (int n = 1; n <= 6; ++n) {
    auto computed = an_cup_table(n);
    auto closed = an_closed_form_table(n);
    for (const auto& [key, e] : closed.entries)
      CHECK(computed.entry(key.first, key.second) == e);
  }
}

TEST_CASE("localization consistency at the fixed points") {
  const int n = 4;
  auto d = an_fixed_point_data(n);
  auto tab = an_cup_table(n);
  for (const auto& [key, e] : tab.entries)
    for (int k = 0; k <= n; ++k)
      CHECK(restrict_class(d, e, k) ==
            d.restrictions[k][key.first] * d.restrictions[k][key.second]);
}

TEST_CASE("cup tables are commutative and associative") {
  for (int n = 1; n <= 6; ++n) {
    auto tab = an_cup_table(n);
    CHECK(table_commutative(tab));
    CHECK(table_associative(tab));
  }
  for (const char* name : {"D4", "E6"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    auto tab = bg_cup_table(rs, group_order(rs.type()));
    CHECK(table_commutative(tab));
    CHECK(table_associative(tab));
  }
}

TEST_CASE("group orders") {
  CHECK(group_order(LieType::parse("A1")) == 2);
  CHECK(group_order(LieType::parse("E7")) == 48);
  for (int n = 4; n <= 8; ++n)
    CHECK(group_order(LieType::make(Family::D, n)) == 4 * (n - 2));
}

TEST_CASE("root-system formula fixtures for E6") {
  auto rs = RootSystem::build(LieType::parse("E6"));
  auto tab = bg_cup_table(rs, 24);
  Vars v = tab.vars;
  Poly t = Poly::variable(v, 0);
  RingElement e11 = tab.entry(0, 0);
  CHECK(e11.c0 == (t * t).scaled(frac(-48)));
  const int expect[6] = {14, 12, 20, 24, 16, 8};
  for (int k = 0; k < 6; ++k) CHECK(e11.c[k] == t.scaled(frac(expect[k])));
  CHECK(tab.entry(0, 3).is_zero());  // e1 . e4 = 0
}

TEST_CASE("published E-type cup tables match the formula") {
  for (const char* name : {"E6", "E7", "E8"}) {
    auto t = LieType::parse(name);
    auto rs = RootSystem::build(t);
    auto computed = bg_cup_table(rs, group_order(t));
    auto diffs = table_diff(reference_cohomology_table(t), computed,
                            "cohomology", 'e');
    CHECK(diffs.empty());
  }
}

TEST_CASE("A-type formula table specializes to localization at t1=t2=t") {
  for (int n = 1; n <= 5; ++n) {
    auto t = LieType::make(Family::A, n);
    auto rs = RootSystem::build(t);
    auto bg = bg_cup_table(rs, group_order(t));
    auto loc = an_cup_table(n);
    Poly tv = Poly::variable(bg.vars, 0);
    for (const auto& [key, e] : bg.entries) {
      const RingElement& l = loc.entry(key.first, key.second);
      RingElement spec;
      spec.c0 = l.c0.substitute({tv, tv});
      for (const auto& p : l.c) spec.c.push_back(p.substitute({tv, tv}));
      CHECK(spec == e);
    }
    // diagonal coefficient (n+3)t
    RingElement diag = bg.entry(0, 0);
    CHECK(diag.c[0] == tv.scaled(frac(n + 3)));
  }
}

TEST_CASE("published D-type table differs from the formula where expected") {
  for (int n = 4; n <= 6; ++n) {
    auto t = LieType::make(Family::D, n);
    auto rs = RootSystem::build(t);
    auto computed = bg_cup_table(rs, group_order(t));
    auto diffs = table_diff(reference_cohomology_table(t), computed,
                            "cohomology", 'e');
    // the printed corollary has known inconsistencies; diffs are reported,
    // never asserted away
    CHECK(!diffs.empty());
    bool diag_const_missing = false;
    for (const auto& d : diffs)
      if (d.entry == "e1*e1") diag_const_missing = true;
    CHECK(diag_const_missing);
  }
}
