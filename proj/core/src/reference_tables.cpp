#include "minorbit/reference_tables.hpp"

#include <algorithm>
#include <array>

#include "minorbit/serialize.hpp"

namespace minorbit {

namespace {

struct ERow {
  int i, j;
  std::array<int, 8> lin;
  int cst;
};

// cohomology entries: cst * t^2 + t * sum lin_k e_k
const std::vector<ERow>& e6_cohomology() {
  static const std::vector<ERow> rows = {
      {1, 1, {14, 12, 20, 24, 16, 8}, -48}, {2, 2, {8, 16, 16, 24, 16, 8}, -48},
      {3, 3, {8, 12, 20, 24, 16, 8}, -48},  {4, 4, {8, 12, 16, 26, 16, 8}, -48},
      {5, 5, {8, 12, 16, 24, 20, 8}, -48},  {6, 6, {8, 12, 16, 24, 20, 14}, -48},
      {1, 3, {-4, -6, -10, -12, -8, -4}, 24},
      {2, 4, {-4, -6, -8, -12, -8, -4}, 24},
      {3, 4, {-4, -6, -8, -12, -8, -4}, 24},
      {4, 5, {-4, -6, -8, -12, -8, -4}, 24},
      {5, 6, {-4, -6, -8, -12, -10, -4}, 24},
  };
  return rows;
}

const std::vector<ERow>& e7_cohomology() {
  static const std::vector<ERow> rows = {
      {1, 1, {22, 24, 36, 48, 36, 24, 12}, -96},
      {2, 2, {16, 28, 32, 48, 36, 24, 12}, -96},
      {3, 3, {16, 24, 36, 48, 36, 24, 12}, -96},
      {4, 4, {16, 24, 32, 50, 36, 24, 12}, -96},
      {5, 5, {16, 24, 32, 48, 40, 24, 12}, -96},
      {6, 6, {16, 24, 32, 48, 40, 30, 12}, -96},
      {7, 7, {16, 24, 32, 48, 40, 32, 20}, -96},
      {1, 3, {-8, -12, -18, -24, -18, -12, -6}, 48},
      {2, 4, {-8, -12, -16, -24, -18, -12, -6}, 48},
      {3, 4, {-8, -12, -16, -24, -18, -12, -6}, 48},
      {4, 5, {-8, -12, -16, -24, -18, -12, -6}, 48},
      {5, 6, {-8, -12, -16, -24, -20, -12, -6}, 48},
      {6, 7, {-8, -12, -16, -24, -20, -16, -6}, 48},
  };
  return rows;
}

const std::vector<ERow>& e8_cohomology() {
  static const std::vector<ERow> rows = {
      {1, 1, {46, 60, 84, 120, 96, 72, 48, 24}, -240},
      {2, 2, {40, 64, 80, 120, 96, 72, 48, 24}, -240},
      {3, 3, {40, 60, 84, 120, 96, 72, 48, 24}, -240},
      {4, 4, {40, 60, 80, 122, 96, 72, 48, 24}, -240},
      {5, 5, {40, 60, 80, 120, 100, 72, 48, 24}, -240},
      {6, 6, {40, 60, 80, 120, 100, 78, 48, 24}, -240},
      {7, 7, {40, 60, 80, 120, 100, 80, 56, 24}, -240},
      {8, 8, {40, 60, 80, 120, 100, 80, 60, 34}, -240},
      {1, 3, {-20, -30, -42, -60, -48, -36, -24, -12}, 120},
      {2, 4, {-20, -30, -40, -60, -48, -36, -24, -12}, 120},
      {3, 4, {-20, -30, -40, -60, -48, -36, -24, -12}, 120},
      {4, 5, {-20, -30, -40, -60, -48, -36, -24, -12}, 120},
      {5, 6, {-20, -30, -40, -60, -50, -36, -24, -12}, 120},
      {6, 7, {-20, -30, -40, -60, -50, -40, -24, -12}, 120},
      {7, 8, {-20, -30, -40, -60, -50, -40, -30, -12}, 120},
  };
  return rows;
}

// quotient-side entries: sum lin_k h_k hbar + cst hbar^2
const std::vector<ERow>& e6_balgebra() {
  static const std::vector<ERow> rows = {
      {4, 4, {4, 6, 8, 13, 8, 4}, -12},  {3, 3, {4, 6, 8, 13, 8, 4}, -12},
      {1, 1, {7, 6, 10, 12, 8, 4}, -12}, {2, 2, {4, 6, 10, 12, 8, 4}, -12},
      {5, 5, {4, 6, 8, 12, 10, 4}, -12}, {6, 6, {4, 6, 8, 12, 10, 7}, -12},
      {1, 3, {-2, -3, -5, -6, -4, -2}, 6},
      {2, 4, {-2, -3, -4, -6, -4, -2}, 6},
      {3, 4, {-2, -3, -4, -6, -4, -2}, 6},
      {4, 5, {-2, -3, -4, -6, -4, -2}, 6},
      {5, 6, {-2, -3, -4, -6, -5, -2}, 6},
  };
  return rows;
}

const std::vector<ERow>& e7_balgebra() {
  static const std::vector<ERow> rows = {
      {2, 4, {4, 6, 8, 12, 9, 6, 3}, -12},
      {4, 4, {-8, -12, -16, -25, -18, -12, -6}, 24},
      {3, 3, {-8, -12, -18, -24, -18, -12, -6}, 24},
      {2, 2, {-8, -14, -16, -24, -18, -12, -6}, 24},
      {1, 1, {-8, -12, -16, -24, -18, -12, -6}, 24},
      {5, 5, {-8, -12, -16, -24, -20, -12, -6}, 24},
      {6, 6, {-8, -12, -16, -24, -20, -15, -6}, 24},
      {7, 7, {-8, -12, -16, -24, -20, -16, -10}, 24},
      {3, 4, {4, 6, 8, 12, 9, 6, 3}, -12},
      {4, 5, {4, 6, 8, 12, 9, 6, 3}, -12},
      {1, 3, {4, 6, 9, 12, 9, 6, 3}, -12},
      {5, 6, {4, 6, 8, 12, 10, 6, 3}, -12},
      {6, 7, {4, 6, 8, 12, 10, 8, 3}, -12},
  };
  return rows;
}

const std::vector<ERow>& e8_balgebra() {
  static const std::vector<ERow> rows = {
      {4, 4, {20, 30, 40, 61, 48, 36, 24, 12}, -60},
      {2, 2, {20, 32, 40, 60, 48, 36, 24, 12}, -60},
      {3, 3, {20, 30, 42, 61, 48, 36, 24, 12}, -60},
      {1, 1, {23, 30, 42, 60, 48, 36, 24, 12}, -60},
      {5, 5, {20, 30, 40, 60, 50, 36, 24, 12}, -60},
      {6, 6, {20, 30, 40, 60, 50, 39, 24, 12}, -60},
      {7, 7, {20, 30, 40, 60, 50, 40, 28, 12}, -60},
      {8, 8, {20, 30, 40, 60, 50, 40, 30, 17}, -60},
      {2, 4, {-10, -15, -20, -30, -24, -18, -12, -6}, 30},
      {3, 4, {-10, -15, -20, -30, -24, -18, -12, -6}, 30},
      {4, 5, {-10, -15, -20, -30, -24, -18, -12, -6}, 30},
      {1, 3, {-10, -15, -21, -30, -24, -18, -12, -6}, 30},
      {5, 6, {-10, -15, -20, -30, -25, -18, -12, -6}, 30},
      {6, 7, {-10, -15, -20, -30, -25, -20, -12, -6}, 30},
      {7, 8, {-10, -15, -20, -30, -25, -20, -15, -6}, 30},
  };
  return rows;
}

// entries read as: cst * var^2 + var * sum lin_k (basis_k)
MultiplicationTable from_rows(LieType t, const std::vector<ERow>& rows,
                              const char* var) {
  MultiplicationTable tab;
  tab.type = t;
  tab.n = t.rank;
  tab.vars = make_vars({var});
  Poly v = Poly::variable(tab.vars, 0);
  Poly v2 = v * v;
  for (int i = 0; i < t.rank; ++i)
    for (int j = i; j < t.rank; ++j)
      tab.set(i, j, ring_element_zero(t.rank, tab.vars));
  for (const ERow& r : rows) {
    RingElement e = ring_element_zero(t.rank, tab.vars);
    for (int k = 0; k < t.rank; ++k) e.c[k] = v.scaled(frac(r.lin[k]));
    e.c0 = v2.scaled(frac(r.cst));
    tab.set(r.i - 1, r.j - 1, std::move(e));
  }
  return tab;
}

MultiplicationTable dn_reference_cohomology(int n) {
  MultiplicationTable tab;
  tab.type = LieType::make(Family::D, n);
  tab.n = n;
  tab.vars = make_vars({"t"});
  Poly t = Poly::variable(tab.vars, 0);
  Poly t2 = t * t;
  auto zero = [&] { return ring_element_zero(n, tab.vars); };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) tab.set(i, j, zero());
  // diagonal, k <= n-2: no t^2 constant as printed
  for (int k = 1; k <= n - 2; ++k) {
    RingElement e = zero();
    for (int j = 1; j < k; ++j) e.c[j - 1] = t.scaled(frac(4 * j));
    e.c[k - 1] = t.scaled(frac(2 * n + 2 * k - 2));
    for (int j = k + 1; j <= n - 2; ++j) e.c[j - 1] = t.scaled(frac(4 * n - 8));
    e.c[n - 2] = t.scaled(frac(2 * n - 4));
    e.c[n - 1] = t.scaled(frac(2 * n - 4));
    tab.set(k - 1, k - 1, std::move(e));
  }
  for (int k : {n - 1, n}) {
    RingElement e = zero();
    for (int j = 1; j <= n - 2; ++j) e.c[j - 1] = t.scaled(frac(4 * j));
    e.c[n - 2] = t.scaled(frac(k == n - 1 ? 2 * n : 2 * n - 4));
    e.c[n - 1] = t.scaled(frac(k == n ? 2 * n : 2 * n - 4));
    e.c0 = t2.scaled(frac(4 * (n - 2)));
    tab.set(k - 1, k - 1, std::move(e));
  }
  // adjacent chain pairs, k <= n-2
  for (int k = 1; k <= n - 2; ++k) {
    RingElement e = zero();
    for (int j = 1; j <= k; ++j) e.c[j - 1] = t.scaled(frac(-2 * j));
    for (int j = k + 1; j <= n - 2; ++j)
      e.c[j - 1] = t.scaled(frac(-(2 * n - 4)));
    e.c[n - 2] = t.scaled(frac(-(n - 2)));
    e.c[n - 1] = t.scaled(frac(-(n - 2)));
    e.c0 = t2.scaled(frac(4 * (n - 2)));
    tab.set(k - 1, k, std::move(e));
  }
  // the printed fork entry: no t^2 term
  {
    RingElement e = zero();
    for (int j = 1; j <= n - 2; ++j) e.c[j - 1] = t.scaled(frac(-2 * j));
    e.c[n - 2] = t.scaled(frac(-(n - 2)));
    e.c[n - 1] = t.scaled(frac(-(n - 2)));
    tab.set(n - 3, n - 1, std::move(e));
  }
  return tab;
}

MultiplicationTable an_reference_balgebra(int n) {
  MultiplicationTable tab;
  tab.type = LieType::make(Family::A, n);
  tab.n = n;
  tab.vars = make_vars({"z", "hbar"});
  Poly z = Poly::variable(tab.vars, 0);
  Poly hb = Poly::variable(tab.vars, 1);
  Poly hb2 = hb * hb;
  // z/(n+1) and (z+n+1)/(n+1)
  Poly zf = z.scaled(Rat(1, n + 1));
  Poly zs = zf + Poly::constant(tab.vars, Rat(1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      RingElement e = ring_element_zero(n, tab.vars);
      if (i == j) {
        const int k = i;
        for (int m = 1; m < k; ++m)
          e.c[m - 1] = (zs * hb).scaled(frac(2 * m));
        e.c[k - 1] = (zf.scaled(frac(n + 2 - k)) + zs.scaled(frac(k + 1))) * hb;
        for (int m = k + 1; m <= n; ++m)
          e.c[m - 1] = (zf * hb).scaled(frac(2 * (n + 1 - m)));
        e.c0 = (z * zs * hb2).scaled(frac(-2));
      } else if (j == i + 1) {
        const int k = i;
        for (int m = 1; m <= k; ++m)
          e.c[m - 1] = (zs * hb).scaled(frac(-m));
        for (int m = k + 1; m <= n; ++m)
          e.c[m - 1] = (zf * hb).scaled(frac(-(n + 1 - m)));
        e.c0 = z * zs * hb2;
      }
      tab.set(i - 1, j - 1, std::move(e));
    }
  }
  return tab;
}

MultiplicationTable dn_reference_balgebra(int n) {
  MultiplicationTable tab;
  tab.type = LieType::make(Family::D, n);
  tab.n = n;
  tab.vars = make_vars({"hbar"});
  Poly hb = Poly::variable(tab.vars, 0);
  Poly hb2 = hb * hb;
  auto zero = [&] { return ring_element_zero(n, tab.vars); };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) tab.set(i, j, zero());
  for (int k = 1; k <= n - 2; ++k) {  // h_k^2
    RingElement e = zero();
    for (int j = 1; j < k; ++j) e.c[j - 1] = hb.scaled(frac(2 * j));
    e.c[k - 1] = hb.scaled(frac(n + k - 1));
    for (int j = k + 1; j <= n - 2; ++j) e.c[j - 1] = hb.scaled(frac(2 * n - 4));
    e.c[n - 2] = hb.scaled(frac(n - 2));
    e.c[n - 1] = hb.scaled(frac(n - 2));
    e.c0 = hb2.scaled(frac(-(2 * n - 4)));
    tab.set(k - 1, k - 1, std::move(e));
  }
  for (int k : {n - 1, n}) {
    RingElement e = zero();
    for (int j = 1; j <= n - 2; ++j) e.c[j - 1] = hb.scaled(frac(2 * j));
    e.c[n - 2] = hb.scaled(frac(k == n - 1 ? n : n - 2));
    e.c[n - 1] = hb.scaled(frac(k == n ? n : n - 2));
    e.c0 = hb2.scaled(frac(-(2 * n - 4)));
    tab.set(k - 1, k - 1, std::move(e));
  }
  for (int k = 1; k <= n - 2; ++k) {  // h_k h_{k+1}
    RingElement e = zero();
    for (int j = 1; j <= k; ++j) e.c[j - 1] = hb.scaled(frac(-j));
    for (int j = k + 1; j <= n - 2; ++j) e.c[j - 1] = hb.scaled(frac(-(n - 2)));
    e.c[n - 2] = hb.scaled(Rat(-(n - 2), 2));
    e.c[n - 1] = hb.scaled(Rat(-(n - 2), 2));
    e.c0 = hb2.scaled(frac(n - 2));
    tab.set(k - 1, k, std::move(e));
  }
  {  // the printed h_{n-2} h_n row (with its literal tail and no hbar^2 term)
    RingElement e = zero();
    for (int j = 1; j <= n - 2; ++j) e.c[j - 1] = hb.scaled(frac(-j));
    e.c[n - 2] = hb.scaled(Rat(-(n - 2), 2));
    e.c[n - 1] = hb.scaled(frac(-1));
    tab.set(n - 3, n - 1, std::move(e));
  }
  return tab;
}

}  // namespace

MultiplicationTable reference_balgebra_table(LieType t) {
  switch (t.family) {
    case Family::A: return an_reference_balgebra(t.rank);
    case Family::D: return dn_reference_balgebra(t.rank);
    case Family::E: {
      const auto& rows = t.rank == 6   ? e6_balgebra()
                         : t.rank == 7 ? e7_balgebra()
                                       : e8_balgebra();
      return from_rows(t, rows, "hbar");
    }
  }
  throw std::logic_error("unreachable");
}

MultiplicationTable reference_cohomology_table(LieType t) {
  switch (t.family) {
    case Family::A: return an_closed_form_table(t.rank);
    case Family::D: return dn_reference_cohomology(t.rank);
    case Family::E: {
      const auto& rows = t.rank == 6   ? e6_cohomology()
                         : t.rank == 7 ? e7_cohomology()
                                       : e8_cohomology();
      return from_rows(t, rows, "t");
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<std::pair<Weight, Weight>> reference_lwv_pairs(LieType t) {
  if (t.family != Family::E)
    throw std::invalid_argument("reference_lwv_pairs: E types only");
  switch (t.rank) {
    case 6:
      return {
          {{1, 0, 1, 1, 1, 1}, {1, 2, 2, 3, 2, 1}},
          {{1, 1, 1, 1, 1, 1}, {1, 1, 2, 3, 2, 1}},
          {{1, 1, 1, 2, 1, 1}, {1, 1, 2, 2, 2, 1}},
          {{1, 1, 2, 2, 1, 1}, {1, 1, 1, 2, 2, 1}},
      };
    case 7:
      return {
          {{0, 1, 1, 2, 2, 2, 1}, {2, 2, 3, 4, 3, 2, 1}},
          {{1, 1, 1, 2, 2, 2, 1}, {1, 2, 3, 4, 3, 2, 1}},
          {{1, 1, 2, 2, 2, 2, 1}, {1, 2, 2, 4, 3, 2, 1}},
          {{1, 1, 2, 3, 2, 2, 1}, {1, 2, 2, 3, 3, 2, 1}},
          {{1, 1, 2, 3, 3, 2, 1}, {1, 2, 2, 3, 2, 2, 1}},
      };
    default:
      return {
          {{2, 2, 3, 4, 3, 2, 1, 0}, {2, 3, 4, 6, 5, 4, 3, 2}},
          {{2, 2, 3, 4, 3, 2, 1, 1}, {2, 3, 4, 6, 5, 4, 3, 1}},
          {{2, 2, 3, 4, 3, 2, 2, 1}, {2, 3, 4, 6, 5, 4, 2, 1}},
          {{2, 2, 3, 4, 3, 3, 2, 1}, {2, 3, 4, 6, 5, 3, 2, 1}},
          {{2, 2, 3, 4, 4, 3, 2, 1}, {2, 3, 4, 6, 3, 3, 2, 1}},
          {{2, 2, 3, 5, 4, 3, 2, 1}, {2, 3, 4, 5, 3, 3, 2, 1}},
          {{2, 2, 4, 5, 4, 3, 2, 1}, {2, 3, 3, 5, 3, 3, 2, 1}},
      };
  }
}

std::vector<ErrataEntry> table_diff(const MultiplicationTable& reference,
                                    const MultiplicationTable& computed,
                                    const std::string& side,
                                    char basis_letter) {
  std::vector<ErrataEntry> out;
  for (const auto& [key, ref] : reference.entries) {
    const RingElement& got = computed.entry(key.first, key.second);
    if (ref == got) continue;
    ErrataEntry e;
    e.type = reference.type.str();
    e.side = side;
    e.entry = std::string(1, basis_letter) + std::to_string(key.first + 1) +
              "*" + basis_letter + std::to_string(key.second + 1);
    e.reference_value = ring_element_str(ref, basis_letter);
    e.computed_value = ring_element_str(got, basis_letter);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ErrataEntry> compute_errata(LieType t, const ClosureOptions& opt) {
  std::vector<ErrataEntry> out;
  RootSystem rs = RootSystem::build(t);

  // cohomology side
  MultiplicationTable computed_coh =
      t.family == Family::A ? an_cup_table(t.rank)
                            : bg_cup_table(rs, group_order(t));
  auto coh = table_diff(reference_cohomology_table(t), computed_coh,
                        "cohomology", 'e');
  out.insert(out.end(), coh.begin(), coh.end());

  // quotient side
  BAlgebra b = build_b_algebra(t, opt);
  auto bal = table_diff(reference_balgebra_table(t), b.table, "balgebra", 'h');
  out.insert(out.end(), bal.begin(), bal.end());

  if (t.family == Family::A) {
    const int n = t.rank;
    ErrataEntry e;
    e.type = t.str();
    e.side = "substitution";
    e.entry = "t1";
    e.reference_value = "z*hbar/" + std::to_string(n + 1);
    e.computed_value = "-z*hbar/" + std::to_string(n + 1);
    out.push_back(std::move(e));
  }

  if (t.family == Family::E) {
    // compare the published generator terms with the solved vector
    AsymmetryFunction eps = AsymmetryFunction::standard(rs);
    LieAlgebra g(rs, eps);
    Weight mu = deleted_node_component_tops(rs)[0];
    Weight target = weight_neg(weight_add(rs.highest_root(), mu));
    auto lwv = solve_lowest_weight_vector(g, target);
    std::vector<std::pair<Weight, Weight>> solved;
    for (const auto& [a, bb, c] : lwv) {
      Weight ra = rs.positive_roots()[g.root_of(a)];
      Weight rb = rs.positive_roots()[g.root_of(bb)];
      if (rb < ra) std::swap(ra, rb);
      solved.push_back({ra, rb});
    }
    std::sort(solved.begin(), solved.end());
    auto ref = reference_lwv_pairs(t);
    for (auto& [a, bb] : ref)
      if (bb < a) std::swap(a, bb);
    std::sort(ref.begin(), ref.end());
    auto wstr = [](const Weight& w) {
      std::string s = "(";
      for (size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + std::to_string(w[i]);
      return s + ")";
    };
    for (size_t k = 0; k < ref.size(); ++k) {
      bool found = std::find(solved.begin(), solved.end(), ref[k]) != solved.end();
      if (found) continue;
      ErrataEntry e;
      e.type = t.str();
      e.side = "generator";
      e.entry = "quadratic term " + std::to_string(k + 1);
      e.reference_value = wstr(ref[k].first) + "*" + wstr(ref[k].second);
      // closest solved pair sharing the first factor
      std::string got = "(not a root pair)";
      for (const auto& s : solved)
        if (s.first == ref[k].first || s.second == ref[k].second ||
            s.second == ref[k].first || s.first == ref[k].second) {
          got = wstr(s.first) + "*" + wstr(s.second);
          break;
        }
      e.computed_value = got;
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace minorbit
