#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "minorbit/poly.hpp"
#include "minorbit/rootsystem.hpp"

namespace minorbit {

/// Chevalley basis with Frenkel-Kac sign structure constants. Basis ids are
/// laid out in the fixed PBW total order
///   NegRoot(0..m-1) < Cartan(0..n-1) < PosRoot(0..m-1),
/// root blocks sorted like RootSystem::positive_roots (height, then lex).
///
/// Bracket table (eps the asymmetry function, h_a the coordinate combination
/// of the coroots of a root a):
///   [h_i, v]      = (wt v, a_i) v
///   [X_a, X_b]    = eps(a,b) X_{a+b}
///   [Y_a, Y_b]    = -eps(a,b) Y_{a+b}
///   [X_a, Y_a]    = h_a
///   [X_a, Y_b]    = -eps(a,b) X_{a-b}   (a-b positive)
///   [X_a, Y_b]    = +eps(a,b) Y_{b-a}   (b-a positive)
/// The Jacobi identity for this table is exercised exhaustively in the tests.
class LieAlgebra {
 public:
  LieAlgebra(RootSystem rs, AsymmetryFunction eps);

  const RootSystem& roots() const { return rs_; }
  const AsymmetryFunction& asym() const { return eps_; }
  int rank() const { return n_; }
  int num_pos() const { return m_; }
  int dim() const { return 2 * m_ + n_; }

  int neg_id(int root_idx) const { return root_idx; }
  int cartan_id(int i) const { return m_ + i; }
  int pos_id(int root_idx) const { return m_ + n_ + root_idx; }
  // 0 = negative root vector, 1 = cartan, 2 = positive root vector
  int kind(int id) const { return id < m_ ? 0 : id < m_ + n_ ? 1 : 2; }
  int root_of(int id) const;   // index into positive_roots; -1 for cartan
  int cartan_of(int id) const { return id - m_; }
  const Weight& weight_of(int id) const { return weights_[id]; }

  struct Term {
    int id;
    Rat c;
  };
  const std::vector<Term>& bracket(int a, int b) const {
    return table_[a * dim() + b];
  }

  const std::vector<std::vector<Rat>>& cartan_inverse() const { return cinv_; }

  std::string basis_name(int id) const;

 private:
  std::vector<Term> compute_bracket(int a, int b) const;
  RootSystem rs_;
  AsymmetryFunction eps_;
  int n_ = 0, m_ = 0;
  std::vector<Weight> weights_;
  std::vector<std::vector<Term>> table_;
  std::vector<std::vector<Rat>> cinv_;
};

/// Degree <= 2 element of the enveloping algebra in PBW normal form, in the
/// filtered picture (the homogenization variable is reinstated only when
/// relations are exported). Quadratic keys satisfy first <= second.
template <class K>
struct U2 {
  K scalar{};
  std::map<int, K> lin;
  std::map<std::pair<int, int>, K> quad;

  bool is_zero() const;
};

/// kappa-projection image: a polynomial in the Cartan generators.
template <class K>
struct CartanPoly {
  K scalar{};
  std::map<int, K> lin;
  std::map<std::pair<int, int>, K> quad;  // i <= j
};

// coefficient helpers shared by the Rat and Poly instantiations
inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Poly& c) { return c.is_zero(); }
inline Rat coeff_scale(const Rat& c, const Rat& s) { return c * s; }
inline Poly coeff_scale(const Poly& c, const Rat& s) { return c.scaled(s); }

template <class K>
bool U2<K>::is_zero() const {
  if (!coeff_is_zero(scalar)) return false;
  for (const auto& [k, c] : lin)
    if (!coeff_is_zero(c)) return false;
  for (const auto& [k, c] : quad)
    if (!coeff_is_zero(c)) return false;
  return true;
}

/// PBW arithmetic, adjoint action, symmetrization and the kappa projection,
/// parameterized over the coefficient ring (exact rationals for D/E, sparse
/// polynomials in the family parameter for type A).
template <class K>
class U2Engine {
 public:
  U2Engine(const LieAlgebra& g, K one) : g_(&g), one_(std::move(one)) {}

  const LieAlgebra& algebra() const { return *g_; }
  K kzero() const { return coeff_scale(one_, Rat(0)); }
  K kone() const { return one_; }
  K from_rat(const Rat& c) const { return coeff_scale(one_, c); }

  U2<K> zero() const {
    U2<K> u;
    u.scalar = kzero();
    return u;
  }

  void add_scalar(U2<K>& dst, const K& c) const { dst.scalar = dst.scalar + c; }

  void add_linear(U2<K>& dst, int a, const K& c) const {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = dst.lin.try_emplace(a, c);
    if (!fresh) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) dst.lin.erase(it);
    }
  }

  /// Adds c * (a. b), PBW-reordering with the homogenized commutator
  /// correction when a > b.
  void add_monomial(U2<K>& dst, int a, int b, const K& c) const {
    if (coeff_is_zero(c)) return;
    if (a > b) {
      for (const auto& t : g_->bracket(a, b))
        add_linear(dst, t.id, coeff_scale(c, t.c));
      std::swap(a, b);
    }
    auto key = std::make_pair(a, b);
    auto [it, fresh] = dst.quad.try_emplace(key, c);
    if (!fresh) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) dst.quad.erase(it);
    }
  }

  U2<K> monomial(int a, int b, const K& c) const {
    U2<K> u = zero();
    add_monomial(u, a, b, c);
    return u;
  }

  void add(U2<K>& dst, const U2<K>& src, const Rat& s = Rat(1)) const {
    dst.scalar = dst.scalar + coeff_scale(src.scalar, s);
    for (const auto& [k, c] : src.lin) add_linear(dst, k, coeff_scale(c, s));
    for (const auto& [k, c] : src.quad) {
      auto [it, fresh] = dst.quad.try_emplace(k, coeff_scale(c, s));
      if (!fresh) {
        it->second = it->second + coeff_scale(c, s);
        if (coeff_is_zero(it->second)) dst.quad.erase(it);
      }
    }
  }

  /// Adjoint action ad_x = [x, -]: Leibniz on monomials, then PBW
  /// renormalization (which is where the homogenized corrections enter).
  U2<K> ad(int x, const U2<K>& u) const {
    U2<K> out = zero();
    for (const auto& [k, c] : u.lin)
      for (const auto& t : g_->bracket(x, k))
        add_linear(out, t.id, coeff_scale(c, t.c));
    for (const auto& [key, c] : u.quad) {
      auto [a, b] = key;
      for (const auto& t : g_->bracket(x, a))
        add_monomial(out, t.id, b, coeff_scale(c, t.c));
      for (const auto& t : g_->bracket(x, b))
        add_monomial(out, a, t.id, coeff_scale(c, t.c));
    }
    return out;
  }

  /// beta(x y) = (x y + y x)/2 summed over the listed pairs.
  U2<K> symmetrize(const std::vector<std::tuple<int, int, Rat>>& pairs) const {
    U2<K> out = zero();
    for (const auto& [a, b, c] : pairs) {
      K half = from_rat(c / 2);
      add_monomial(out, a, b, half);
      add_monomial(out, b, a, half);
    }
    return out;
  }

  /// C = sum_{a>0} (X_a Y_a + Y_a X_a) + sum_i h_i h_i^dual, PBW-normalized.
  U2<K> casimir() const {
    U2<K> out = zero();
    const int m = g_->num_pos(), n = g_->rank();
    for (int r = 0; r < m; ++r) {
      add_monomial(out, g_->pos_id(r), g_->neg_id(r), kone());
      add_monomial(out, g_->neg_id(r), g_->pos_id(r), kone());
    }
    const auto& cinv = g_->cartan_inverse();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(cinv[i][j]))
          add_monomial(out, g_->cartan_id(i), g_->cartan_id(j),
                       from_rat(cinv[i][j]));
    return out;
  }

  /// Common root-lattice weight of all monomials, or nullopt for mixed input.
  std::optional<Weight> weight_of(const U2<K>& u) const {
    const int n = g_->rank();
    std::optional<Weight> w;
    auto meet = [&](const Weight& cand) {
      if (!w) {
        w = cand;
        return true;
      }
      return *w == cand;
    };
    bool ok = true;
    if (!coeff_is_zero(u.scalar)) ok = ok && meet(Weight(n, 0));
    for (const auto& [k, c] : u.lin) ok = ok && meet(g_->weight_of(k));
    for (const auto& [key, c] : u.quad)
      ok = ok && meet(weight_add(g_->weight_of(key.first), g_->weight_of(key.second)));
    if (!ok) return std::nullopt;
    if (!w) w = Weight(n, 0);
    return w;
  }

  /// Projection onto the Cartan polynomial ring along n+ U + U n-. In PBW
  /// normal form the only correction is (Y_a, X_a) -> -h_a; every other
  /// monomial containing a root vector dies.
  CartanPoly<K> project_kappa(const U2<K>& u) const {
    auto w = weight_of(u);
    if (!w || weight_height(*w) != 0 || *w != Weight(g_->rank(), 0))
      throw std::invalid_argument("project_kappa: input must have weight 0");
    CartanPoly<K> out;
    out.scalar = u.scalar;
    auto addlin = [&](int i, const K& c) {
      auto [it, fresh] = out.lin.try_emplace(i, c);
      if (!fresh) {
        it->second = it->second + c;
        if (coeff_is_zero(it->second)) out.lin.erase(it);
      }
    };
    for (const auto& [k, c] : u.lin)
      if (g_->kind(k) == 1) addlin(g_->cartan_of(k), c);
    for (const auto& [key, c] : u.quad) {
      auto [a, b] = key;
      if (g_->kind(a) == 1 && g_->kind(b) == 1) {
        int i = g_->cartan_of(a), j = g_->cartan_of(b);
        if (i > j) std::swap(i, j);
        auto [it, fresh] = out.quad.try_emplace(std::make_pair(i, j), c);
        if (!fresh) {
          it->second = it->second + c;
          if (coeff_is_zero(it->second)) out.quad.erase(it);
        }
      } else if (g_->kind(a) == 0 && g_->kind(b) == 2 &&
                 g_->root_of(a) == g_->root_of(b)) {
        const Weight& r = g_->roots().positive_roots()[g_->root_of(a)];
        for (int i = 0; i < g_->rank(); ++i)
          if (r[i] != 0) addlin(i, coeff_scale(c, frac(-r[i])));
      }
    }
    return out;
  }

  std::string render(const U2<K>& u) const;

 private:
  const LieAlgebra* g_;
  K one_;
};

template <class K>
std::string U2Engine<K>::render(const U2<K>& u) const {
  std::string out;
  auto coeff_str = [](const K& c) {
    if constexpr (std::is_same_v<K, Rat>) return c.get_str();
    else return c.str();
  };
  for (const auto& [key, c] : u.quad) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_str(c) + ")*" + g_->basis_name(key.first) + "." +
           g_->basis_name(key.second);
  }
  for (const auto& [k, c] : u.lin) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_str(c) + ")*" + g_->basis_name(k);
  }
  if (!coeff_is_zero(u.scalar)) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_str(u.scalar) + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace minorbit
