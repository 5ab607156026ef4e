#include "minorbit/enveloping.hpp"

#include <stdexcept>

namespace minorbit {

namespace {

std::vector<std::vector<Rat>> invert_cartan(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(c[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int sel = col;
    while (sel < n && is_zero(a[sel][col])) ++sel;
    if (sel == n) throw std::logic_error("cartan matrix singular");
    std::swap(a[col], a[sel]);
    Rat inv = 1 / a[col][col];
    for (int k = 0; k < 2 * n; ++k) a[col][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Rat f = a[r][col];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

LieAlgebra::LieAlgebra(RootSystem rs, AsymmetryFunction eps)
    : rs_(std::move(rs)), eps_(std::move(eps)) {
  n_ = rs_.rank();
  m_ = static_cast<int>(rs_.positive_roots().size());
  weights_.resize(dim());
  for (int r = 0; r < m_; ++r) {
    weights_[neg_id(r)] = weight_neg(rs_.positive_roots()[r]);
    weights_[pos_id(r)] = rs_.positive_roots()[r];
  }
  for (int i = 0; i < n_; ++i) weights_[cartan_id(i)] = Weight(n_, 0);
  cinv_ = invert_cartan(rs_.cartan());
  const int d = dim();
  table_.resize(static_cast<size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) table_[a * d + b] = compute_bracket(a, b);
}

int LieAlgebra::root_of(int id) const {
  if (id < m_) return id;
  if (id < m_ + n_) return -1;
  return id - m_ - n_;
}

std::vector<LieAlgebra::Term> LieAlgebra::compute_bracket(int a, int b) const {
  const int ka = kind(a), kb = kind(b);
  std::vector<Term> out;
  if (ka == 1 && kb == 1) return out;
  if (ka == 1) {
    long c = rs_.inner(weights_[b], rs_.simple_root(cartan_of(a)));
    if (c != 0) out.push_back({b, frac(c)});
    return out;
  }
  if (kb == 1) {
    long c = rs_.inner(weights_[a], rs_.simple_root(cartan_of(b)));
    if (c != 0) out.push_back({a, frac(-c)});
    return out;
  }
  // two root vectors
  const Weight& ra = rs_.positive_roots()[root_of(a)];
  const Weight& rb = rs_.positive_roots()[root_of(b)];
  const int sa = ka == 2 ? 1 : -1, sb = kb == 2 ? 1 : -1;
  if (sa == sb) {
    Weight sum = weight_add(ra, rb);
    int idx = rs_.root_index(sum);
    if (idx < 0) return out;
    int sign = eps_.eps(ra, rb) * (sa > 0 ? 1 : -1);
    out.push_back({sa > 0 ? pos_id(idx) : neg_id(idx), frac(sign)});
    return out;
  }
  // opposite kinds; orient as [X_p, Y_q]
  const Weight& p = sa > 0 ? ra : rb;
  const Weight& q = sa > 0 ? rb : ra;
  const int flip = sa > 0 ? 1 : -1;  // [Y,X] = -[X,Y]
  if (p == q) {
    for (int i = 0; i < n_; ++i)
      if (p[i] != 0) out.push_back({cartan_id(i), frac(flip * p[i])});
    return out;
  }
  Weight diff = weight_sub(p, q);
  int idx = rs_.root_index(diff);
  if (idx >= 0) {
    out.push_back({pos_id(idx), frac(-flip * eps_.eps(p, q))});
    return out;
  }
  idx = rs_.root_index(weight_neg(diff));
  if (idx >= 0) {
    out.push_back({neg_id(idx), frac(flip * eps_.eps(p, q))});
    return out;
  }
  return out;
}

std::string LieAlgebra::basis_name(int id) const {
  const int k = kind(id);
  if (k == 1) return "h" + std::to_string(cartan_of(id) + 1);
  const Weight& r = rs_.positive_roots()[root_of(id)];
  std::string sub;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (!sub.empty()) sub += " ";
    sub += std::to_string(i + 1);
    if (r[i] > 1) sub += "^" + std::to_string(r[i]);
  }
  return (k == 0 ? "Y{" : "X{") + sub + "}";
}

}  // namespace minorbit
