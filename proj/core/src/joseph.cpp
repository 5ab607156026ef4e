#include "minorbit/joseph.hpp"

#include <algorithm>

#include "minorbit/cache.hpp"
#include "minorbit/serialize.hpp"
#include "minorbit/weights.hpp"

namespace minorbit {

std::vector<Weight> deleted_node_component_tops(const RootSystem& rs) {
  const int n = rs.rank();
  const Weight& theta = rs.highest_root();
  std::vector<bool> keep(n, true);
  for (int i = 0; i < n; ++i)
    if (rs.inner(theta, rs.simple_root(i)) != 0) keep[i] = false;

  std::vector<bool> seen(n, false);
  std::vector<Weight> tops;
  for (int s = 0; s < n; ++s) {
    if (!keep[s] || seen[s]) continue;
    std::vector<bool> comp(n, false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp[x] = true;
      for (int y = 0; y < n; ++y)
        if (keep[y] && !seen[y] && rs.cartan()[x][y] != 0) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    // highest root supported on the component
    Weight best;
    long best_h = -1;
    for (const Weight& r : rs.positive_roots()) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (r[i] != 0 && !comp[i]) inside = false;
      if (!inside) continue;
      long h = weight_height(r);
      if (h > best_h || (h == best_h && r > best)) {
        best = r;
        best_h = h;
      }
    }
    tops.push_back(best);
  }
  std::sort(tops.begin(), tops.end());
  return tops;
}

std::vector<std::tuple<int, int, Rat>> solve_lowest_weight_vector(
    const LieAlgebra& g, const Weight& target) {
  const int n = g.rank();
  const int d = g.dim();
  // candidate symmetric pairs of the requested weight
  std::vector<std::pair<int, int>> cands;
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b)
      if (weight_add(g.weight_of(a), g.weight_of(b)) == target)
        cands.push_back({a, b});
  if (cands.empty())
    throw std::logic_error("lowest-weight solve: empty weight space");

  // constraints: each simple lowering operator kills the vector (Leibniz
  // action in Sym^2); rows are indexed by (operator, output pair)
  std::map<std::tuple<int, int, int>, size_t> row_of;  // (i, u, v) -> row
  std::vector<std::vector<Rat>> mat;
  auto row_for = [&](int i, int u, int v) -> std::vector<Rat>& {
    auto key = std::make_tuple(i, u, v);
    auto it = row_of.find(key);
    if (it == row_of.end()) {
      row_of.emplace(key, mat.size());
      mat.emplace_back(cands.size(), Rat(0));
      return mat.back();
    }
    return mat[it->second];
  };
  for (int i = 0; i < n; ++i) {
    int y = g.neg_id(g.roots().root_index(g.roots().simple_root(i)));
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      auto [a, b] = cands[ci];
      for (const auto& t : g.bracket(y, a)) {
        int u = t.id, v = b;
        if (u > v) std::swap(u, v);
        row_for(i, u, v)[ci] += t.c;
      }
      for (const auto& t : g.bracket(y, b)) {
        int u = a, v = t.id;
        if (u > v) std::swap(u, v);
        row_for(i, u, v)[ci] += t.c;
      }
    }
  }

  auto kernel = nullspace(mat);
  if (kernel.size() != 1)
    throw std::logic_error("lowest-weight solve: multiplicity " +
                           std::to_string(kernel.size()) + " at a component");
  std::vector<Rat> sol = kernel[0];
  // integerize, strip content, sign-normalize on the first nonzero entry
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Rat& c : sol) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class nn = abs(c.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nn.get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd == 0 ? 1 : num_gcd);
  scale.canonicalize();
  int lead_sign = 0;
  for (const Rat& c : sol)
    if (!is_zero(c)) {
      lead_sign = sgn(c);
      break;
    }
  if (lead_sign < 0) scale = -scale;
  std::vector<std::tuple<int, int, Rat>> out;
  for (size_t ci = 0; ci < cands.size(); ++ci) {
    Rat c = sol[ci] * scale;
    if (!is_zero(c)) out.push_back({cands[ci].first, cands[ci].second, c});
  }
  return out;
}

Poly casimir_constant(LieType t, const Vars& zring) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: {
      // n (z/(n+1) + 1) z
      Poly z = Poly::variable(zring, "z");
      return (z * z).scaled(Rat(n) / (n + 1)) + z.scaled(frac(n));
    }
    case Family::D:
      return Poly::constant(zring, frac(2L * n - 1L * n * n));
    case Family::E:
      return Poly::constant(
          zring, frac(n == 6 ? -36 : n == 7 ? -84 : -240));
  }
  throw std::logic_error("unreachable");
}

namespace {

// value of a weight-(-theta) element on the highest-weight line of the
// parabolic Verma module with character lambda = z w_n; returns the
// coefficient of Y_theta v
Poly shift_value(const U2Engine<Poly>& eng, const U2<Poly>& bv) {
  const LieAlgebra& g = eng.algebra();
  const int n = g.rank();
  const int theta_idx = g.roots().root_index(g.roots().highest_root());
  const int ytheta = g.neg_id(theta_idx);
  Poly z = Poly::variable(eng.kone().vars(), "z");
  Poly val = eng.kzero();
  for (const auto& [k, c] : bv.lin)
    if (k == ytheta) val += c;
  for (const auto& [key, c] : bv.quad) {
    auto [a, b] = key;
    if (a == ytheta && g.kind(b) == 1) {
      if (g.cartan_of(b) == n - 1) val += c * z;  // lambda(h_n) = z
    } else if (g.kind(a) == 0 && g.kind(b) == 0) {
      const Weight& rb = g.roots().positive_roots()[g.root_of(b)];
      if (rb[n - 1] == 0) continue;  // Levi lowering kills the line
      for (const auto& t : g.bracket(a, b))
        if (t.id == ytheta) val += c.scaled(t.c);
    }
  }
  return val;
}

}  // namespace

template <class K>
std::vector<U2<K>> joseph_generators(const U2Engine<K>& eng) {
  const LieAlgebra& g = eng.algebra();
  const RootSystem& rs = g.roots();
  const LieType t = rs.type();
  const int n = rs.rank();
  std::vector<U2<K>> gens;

  const Weight& theta = rs.highest_root();
  for (const Weight& mu : deleted_node_component_tops(rs)) {
    Weight target = weight_neg(weight_add(theta, mu));
    gens.push_back(eng.symmetrize(solve_lowest_weight_vector(g, target)));
  }

  if (t.family == Family::A && n >= 2) {
    if constexpr (std::is_same_v<K, Poly>) {
      U2<Poly> bv = eng.symmetrize(
          solve_lowest_weight_vector(g, weight_neg(theta)));
      Poly val = shift_value(eng, bv);
      int ytheta = g.neg_id(rs.root_index(theta));
      eng.add_linear(bv, ytheta, -val);
      gens.push_back(std::move(bv));
    } else {
      throw std::logic_error(
          "type A joseph generators need the z-polynomial coefficient ring");
    }
  }

  U2<K> cas = eng.casimir();
  Vars zring;
  if constexpr (std::is_same_v<K, Poly>) zring = eng.kone().vars();
  else zring = make_vars({});
  Poly clam = casimir_constant(t, zring);
  if constexpr (std::is_same_v<K, Poly>) {
    eng.add_scalar(cas, -clam);
  } else {
    eng.add_scalar(cas, -clam.constant_value());
  }
  gens.push_back(std::move(cas));
  return gens;
}

template std::vector<U2<Rat>> joseph_generators(const U2Engine<Rat>&);
template std::vector<U2<Poly>> joseph_generators(const U2Engine<Poly>&);

namespace {

template <class K>
BAlgebra assemble(LieType t, const U2Engine<K>& eng,
                  const ClosureResult<K>& clo,
                  const ExtractedRelations<K>& rels) {
  const int n = t.rank;
  BAlgebra b;
  b.type = t;
  b.vars = t.family == Family::A ? make_vars({"z", "hbar"}) : make_vars({"hbar"});
  b.table.type = t;
  b.table.n = n;
  b.table.vars = b.vars;
  Poly hbar = Poly::variable(b.vars, "hbar");
  for (const auto& [key, rel] : rels.rows) {
    RingElement e = ring_element_zero(n, b.vars);
    const auto& [lin, scal] = rel;
    for (int k = 0; k < n; ++k) {
      Poly coeff;
      if constexpr (std::is_same_v<K, Poly>) {
        coeff = lin[k].substitute({Poly::variable(b.vars, "z")});
      } else {
        coeff = Poly::constant(b.vars, lin[k]);
      }
      e.c[k] = -(coeff * hbar);
    }
    Poly sc;
    if constexpr (std::is_same_v<K, Poly>) {
      sc = scal.substitute({Poly::variable(b.vars, "z")});
    } else {
      sc = Poly::constant(b.vars, scal);
    }
    e.c0 = -(sc * hbar * hbar);
    b.table.set(key.first, key.second, std::move(e));
  }
  b.weight_zero_dim = clo.weight_zero_dim;
  b.total_dim = clo.total_dim;
  return b;
}

template <class K>
BAlgebra run_pipeline(LieType t, const LieAlgebra& g, const U2Engine<K>& eng) {
  RootSystem rs = g.roots();
  Weight two_theta = weight_add(rs.highest_root(), rs.highest_root());
  mpz_class dim_g = rs.dim_g();
  mpz_class bound = dim_g * (dim_g + 1) / 2 - weyl_dim(rs, two_theta);
  auto gens = joseph_generators(eng);
  auto clo = close_under_ad(eng, gens, bound.get_si());
  if (clo.total_dim != bound.get_si())
    throw std::logic_error("ad-closure dimension " +
                           std::to_string(clo.total_dim) + " != expected " +
                           bound.get_str());
  auto rels = extract_relations(eng, clo);
  return assemble(t, eng, clo, rels);
}

}  // namespace

BAlgebra build_b_algebra(LieType t, const ClosureOptions& opt) {
  RootSystem rs = RootSystem::build(t);
  AsymmetryFunction eps = opt.orientation
                              ? AsymmetryFunction::from_edges(rs, *opt.orientation)
                              : AsymmetryFunction::standard(rs);
  const bool heavy = t.family == Family::E && t.rank >= 7;
  std::string cache_key =
      "balgebra_" + t.str() + "_" + eps.fingerprint();
  auto dir = resolve_cache_dir(opt.cache_dir);
  if (dir) {
    if (auto j = cache_load(*dir, cache_key)) {
      BAlgebra b = balgebra_from_json(*j);
      b.from_cache = true;
      return b;
    }
  }
  if (heavy && !opt.allow_heavy)
    throw HeavyComputation(
        t.str() +
        " closure handles a few thousand basis vectors of the degree-2 ideal "
        "and can take many minutes; pass --allow-heavy to run it");

  LieAlgebra g(rs, eps);
  BAlgebra b;
  if (t.family == Family::A) {
    Vars zring = make_vars({"z"});
    U2Engine<Poly> eng(g, Poly::constant(zring, Rat(1)));
    b = run_pipeline(t, g, eng);
  } else {
    U2Engine<Rat> eng(g, Rat(1));
    b = run_pipeline(t, g, eng);
  }
  if (dir) cache_store(*dir, cache_key, balgebra_to_json(b));
  return b;
}

}  // namespace minorbit
