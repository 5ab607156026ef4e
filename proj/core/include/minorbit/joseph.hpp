#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "minorbit/cohomology.hpp"
#include "minorbit/enveloping.hpp"
#include "minorbit/linalg.hpp"
#include "minorbit/poly.hpp"
#include "minorbit/rootsystem.hpp"

namespace minorbit {

struct HeavyComputation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Highest roots of the diagram components left after deleting every simple
/// root not orthogonal to the highest root (one component for A with n >= 3
/// and for E; two for D with n >= 5; three for D4).
std::vector<Weight> deleted_node_component_tops(const RootSystem& rs);

// ---------------------------------------------------------------------------
// generators

/// Lowest-weight vector of the Sym^2 g component of lowest weight `target`,
/// solved as the kernel of the simple lowering operators on that weight
/// space; the kernel is one-dimensional. Coefficients are integers with
/// content 1 and a sign-normalized first entry.
std::vector<std::tuple<int, int, Rat>> solve_lowest_weight_vector(
    const LieAlgebra& g, const Weight& target);

/// Generators of the degree-2 part of the ideal: one symmetrized
/// lowest-weight vector per deleted-node component, the extra type-A vector
/// with its parabolic character shift, and the shifted Casimir element.
template <class K>
std::vector<U2<K>> joseph_generators(const U2Engine<K>& eng);

// ---------------------------------------------------------------------------
// closure

// Monomial keys ordered so quadratics lead: (0,a,b) < (1,a,_) < (2,_,_).
using MonoKey = std::tuple<int, int, int>;

template <class K>
using ClosureRow = std::map<MonoKey, K>;

template <class K>
struct ClosureResult {
  // weight -> rows keyed by their leading monomial
  std::map<Weight, std::map<MonoKey, ClosureRow<K>>> blocks;
  long long total_dim = 0;
  long long weight_zero_dim = 0;
};

template <class K>
ClosureResult<K> close_under_ad(const U2Engine<K>& eng,
                                const std::vector<U2<K>>& gens,
                                long long total_dim_bound);

/// Re-checks the stability certificate: ad by every simple generator of every
/// basis row reduces to zero inside the closure.
template <class K>
bool closure_is_stable(const U2Engine<K>& eng, const ClosureResult<K>& clo);

// ---------------------------------------------------------------------------
// relations

/// Weight-0 relations, row-reduced so each has a distinct leading quadratic
/// monomial h_i h_j with coefficient 1:  h_i h_j + sum lin_k h_k + scal = 0
/// in the filtered picture.
template <class K>
struct ExtractedRelations {
  int n = 0;
  std::map<std::pair<int, int>, std::pair<std::vector<K>, K>> rows;
};

template <class K>
ExtractedRelations<K> extract_relations(const U2Engine<K>& eng,
                                        const ClosureResult<K>& clo);

/// Reduces a weight-0 Cartan polynomial modulo the extracted relations;
/// true when it lands on zero.
template <class K>
bool reduces_to_zero(const U2Engine<K>& eng, const ExtractedRelations<K>& rels,
                     const CartanPoly<K>& p);

// ---------------------------------------------------------------------------
// B-algebra

struct ClosureOptions {
  bool allow_heavy = false;
  std::optional<std::string> cache_dir;
  std::optional<std::vector<std::pair<int, int>>> orientation;
};

/// The quotient table on the basis {1, h_1..h_n}: base ring {z, hbar} for
/// type A, {hbar} otherwise; entry (i,j) is the hbar-homogenized value of
/// h_i h_j.
struct BAlgebra {
  LieType type{Family::A, 1};
  Vars vars;
  MultiplicationTable table;
  long long weight_zero_dim = 0;
  long long total_dim = 0;
  bool from_cache = false;
};

/// Full pipeline: generators -> ad-closure -> kappa -> relations -> table.
/// E7/E8 refuse to run without allow_heavy unless a cached table exists.
BAlgebra build_b_algebra(LieType t, const ClosureOptions& opt = {});

/// Casimir eigenvalue constants, taken verbatim per type: the type-A family
/// value n(z/(n+1)+1)z and the constants 2n-n^2, -36, -84, -240.
Poly casimir_constant(LieType t, const Vars& zring);

// ============================ template bodies =============================

namespace detail {

inline void row_strip_content(ClosureRow<Rat>& row) {
  mpz_class num_gcd = 0, den_lcm = 1;
  int lead = 0;
  for (auto& [k, c] : row) {
    if (is_zero(c)) continue;
    if (lead == 0) lead = sgn(c);
    mpz_class n = abs(c.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (lead == 0) return;
  Rat f(den_lcm * lead, num_gcd);
  f.canonicalize();
  for (auto& [k, c] : row) c *= f;
}

inline void row_strip_content(ClosureRow<Poly>& row) {
  mpz_class num_gcd = 0, den_lcm = 1;
  int lead = 0;
  for (auto& [k, p] : row)
    for (const auto& [e, c] : p.terms()) {
      if (lead == 0) lead = sgn(c);
      mpz_class n = abs(c.get_num());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  if (lead == 0) return;
  Rat f(den_lcm * lead, num_gcd);
  f.canonicalize();
  for (auto& [k, p] : row) p = p.scaled(f);
}

template <class K>
ClosureRow<K> u2_to_row(const U2<K>& u) {
  ClosureRow<K> row;
  for (const auto& [key, c] : u.quad)
    if (!coeff_is_zero(c)) row[{0, key.first, key.second}] = c;
  for (const auto& [k, c] : u.lin)
    if (!coeff_is_zero(c)) row[{1, k, 0}] = c;
  if (!coeff_is_zero(u.scalar)) row[{2, 0, 0}] = u.scalar;
  return row;
}

template <class K>
U2<K> row_to_u2(const U2Engine<K>& eng, const ClosureRow<K>& row) {
  U2<K> u = eng.zero();
  for (const auto& [k, c] : row) {
    switch (std::get<0>(k)) {
      case 0: u.quad[{std::get<1>(k), std::get<2>(k)}] = c; break;
      case 1: u.lin[std::get<1>(k)] = c; break;
      default: u.scalar = u.scalar + c;
    }
  }
  return u;
}

// Reduces row against a block; returns the (possibly empty) remainder.
template <class K>
ClosureRow<K> reduce_row(const std::map<MonoKey, ClosureRow<K>>& block,
                         ClosureRow<K> row) {
  while (!row.empty()) {
    const MonoKey lead = row.begin()->first;
    auto pit = block.find(lead);
    if (pit == block.end()) break;
    const ClosureRow<K>& piv = pit->second;
    const K a = piv.begin()->second;
    const K b = row.begin()->second;
    ClosureRow<K> next;
    for (const auto& [k, c] : row) {
      K v = c * a;
      auto jt = piv.find(k);
      if (jt != piv.end()) v = v - jt->second * b;
      if (!coeff_is_zero(v)) next.emplace(k, std::move(v));
    }
    for (const auto& [k, c] : piv) {
      if (row.count(k)) continue;
      K v = -(c * b);
      if (!coeff_is_zero(v)) next.emplace(k, std::move(v));
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace detail

template <class K>
ClosureResult<K> close_under_ad(const U2Engine<K>& eng,
                                const std::vector<U2<K>>& gens,
                                long long total_dim_bound) {
  const LieAlgebra& g = eng.algebra();
  const int n = g.rank();
  ClosureResult<K> clo;
  std::vector<std::pair<Weight, ClosureRow<K>>> work;

  auto insert = [&](const Weight& w, ClosureRow<K> row) {
    auto& block = clo.blocks[w];
    row = detail::reduce_row(block, std::move(row));
    if (row.empty()) return;
    detail::row_strip_content(row);
    MonoKey lead = row.begin()->first;
    work.push_back({w, row});
    block.emplace(lead, std::move(row));
    ++clo.total_dim;
    if (clo.total_dim > total_dim_bound)
      throw std::logic_error("ad-closure exceeds the degree-2 ideal bound");
  };

  for (const auto& gen : gens) {
    auto w = eng.weight_of(gen);
    if (!w) throw std::logic_error("generator is not weight-pure");
    insert(*w, detail::u2_to_row(gen));
  }

  std::vector<int> simple_gens;
  for (int i = 0; i < n; ++i) {
    int idx = g.roots().root_index(g.roots().simple_root(i));
    simple_gens.push_back(g.pos_id(idx));
    simple_gens.push_back(g.neg_id(idx));
  }

  while (!work.empty()) {
    auto [w, row] = std::move(work.back());
    work.pop_back();
    U2<K> u = detail::row_to_u2(eng, row);
    for (int x : simple_gens) {
      U2<K> img = eng.ad(x, u);
      if (img.is_zero()) continue;
      Weight w2 = weight_add(w, g.weight_of(x));
      insert(w2, detail::u2_to_row(img));
    }
  }

  Weight zero(n, 0);
  auto it = clo.blocks.find(zero);
  clo.weight_zero_dim = it == clo.blocks.end()
                            ? 0
                            : static_cast<long long>(it->second.size());
  return clo;
}

template <class K>
bool closure_is_stable(const U2Engine<K>& eng, const ClosureResult<K>& clo) {
  const LieAlgebra& g = eng.algebra();
  std::vector<int> simple_gens;
  for (int i = 0; i < g.rank(); ++i) {
    int idx = g.roots().root_index(g.roots().simple_root(i));
    simple_gens.push_back(g.pos_id(idx));
    simple_gens.push_back(g.neg_id(idx));
  }
  for (const auto& [w, block] : clo.blocks) {
    for (const auto& [lead, row] : block) {
      U2<K> u = detail::row_to_u2(eng, row);
      for (int x : simple_gens) {
        U2<K> img = eng.ad(x, u);
        if (img.is_zero()) continue;
        Weight w2 = weight_add(w, g.weight_of(x));
        auto bit = clo.blocks.find(w2);
        if (bit == clo.blocks.end()) return false;
        if (!detail::reduce_row(bit->second, detail::u2_to_row(img)).empty())
          return false;
      }
    }
  }
  return true;
}

namespace detail {

// field adapters for the extraction RREF
inline Rat to_field(const Rat& k, const Vars&) { return k; }
inline RatFunc to_field(const Poly& k, const Vars&) { return RatFunc(k); }
template <class F>
bool field_zero(const F& f) {
  if constexpr (std::is_same_v<F, Rat>) return is_zero(f);
  else return f.is_zero();
}

inline Rat field_from_rat(const Rat&, const Rat& c) { return c; }
inline RatFunc field_from_rat(const RatFunc& proto, const Rat& c) {
  return RatFunc::constant(proto.num().vars(), c);
}

// back-conversion after normalization; the denominator must be a unit
inline Rat field_to_coeff(const Rat& f, const U2Engine<Rat>&) { return f; }
inline Poly field_to_coeff(const RatFunc& f, const U2Engine<Poly>& eng) {
  if (!f.den().is_constant())
    throw std::logic_error("relation normalization left a denominator");
  return f.num().scaled(1 / f.den().constant_value());
}

}  // namespace detail

template <class K>
ExtractedRelations<K> extract_relations(const U2Engine<K>& eng,
                                        const ClosureResult<K>& clo) {
  using F = std::conditional_t<std::is_same_v<K, Poly>, RatFunc, Rat>;
  const LieAlgebra& g = eng.algebra();
  const int n = g.rank();
  Weight zero(n, 0);
  auto bit = clo.blocks.find(zero);
  if (bit == clo.blocks.end())
    throw std::logic_error("extract_relations: empty weight-0 block");

  // columns: h_i h_j (i <= j), then h_i, then 1
  std::vector<std::pair<int, int>> quad_cols;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) quad_cols.push_back({i, j});
  const int qn = static_cast<int>(quad_cols.size());
  const int cols = qn + n + 1;
  auto col_of_quad = [&](int i, int j) { return i * n - i * (i - 1) / 2 + (j - i); };

  std::vector<std::vector<F>> mat;
  for (const auto& [lead, row] : bit->second) {
    CartanPoly<K> cp = eng.project_kappa(detail::row_to_u2(eng, row));
    std::vector<F> v(cols, detail::to_field(eng.kzero(), Vars{}));
    bool nonzero = false;
    for (const auto& [key, c] : cp.quad) {
      v[col_of_quad(key.first, key.second)] = detail::to_field(c, Vars{});
      nonzero = true;
    }
    for (const auto& [k, c] : cp.lin) {
      v[qn + k] = detail::to_field(c, Vars{});
      nonzero = true;
    }
    if (!coeff_is_zero(cp.scalar)) {
      v[qn + n] = detail::to_field(cp.scalar, Vars{});
      nonzero = true;
    }
    if (nonzero) mat.push_back(std::move(v));
  }

  // Gauss-Jordan over the fraction field
  const int rows = static_cast<int>(mat.size());
  int rank = 0;
  std::vector<int> pivot_cols;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = rank;
    while (sel < rows && detail::field_zero(mat[sel][col])) ++sel;
    if (sel == rows) continue;
    std::swap(mat[rank], mat[sel]);
    F piv = mat[rank][col];
    for (int c = 0; c < cols; ++c) mat[rank][c] = mat[rank][c] / piv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || detail::field_zero(mat[r][col])) continue;
      F f = mat[r][col];
      for (int c = 0; c < cols; ++c)
        mat[r][c] = mat[r][c] - f * mat[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  if (rank != qn)
    throw std::logic_error("relation extraction: weight-0 rank " +
                           std::to_string(rank) + ", expected " +
                           std::to_string(qn));
  for (int r = 0; r < rank; ++r)
    if (pivot_cols[r] >= qn)
      throw std::logic_error(
          "relation extraction: leading-monomial collision on the quadratic "
          "block");

  ExtractedRelations<K> rels;
  rels.n = n;
  for (int r = 0; r < rank; ++r) {
    auto [i, j] = quad_cols[pivot_cols[r]];
    std::vector<K> lin;
    lin.reserve(n);
    for (int k = 0; k < n; ++k)
      lin.push_back(detail::field_to_coeff(mat[r][qn + k], eng));
    K scal = detail::field_to_coeff(mat[r][qn + n], eng);
    rels.rows[{i, j}] = {std::move(lin), std::move(scal)};
  }
  return rels;
}

template <class K>
bool reduces_to_zero(const U2Engine<K>& eng, const ExtractedRelations<K>& rels,
                     const CartanPoly<K>& p) {
  const int n = rels.n;
  std::vector<K> lin(n, eng.kzero());
  K scal = p.scalar;
  for (const auto& [k, c] : p.lin) lin[k] = lin[k] + c;
  for (const auto& [key, c] : p.quad) {
    auto it = rels.rows.find(key);
    if (it == rels.rows.end()) return false;
    // h_i h_j = -(sum lin_k h_k + scal)
    for (int k = 0; k < n; ++k) lin[k] = lin[k] - c * it->second.first[k];
    scal = scal - c * it->second.second;
  }
  if (!coeff_is_zero(scal)) return false;
  for (const K& c : lin)
    if (!coeff_is_zero(c)) return false;
  return true;
}

}  // namespace minorbit
