#include "minorbit/linalg.hpp"

#include <string>

namespace minorbit {

namespace {

void strip_row_content(std::vector<Rat>& row) {
  mpz_class num_gcd = 0, den_lcm = 1;
  int lead_sign = 0;
  for (const Rat& c : row) {
    if (is_zero(c)) continue;
    if (lead_sign == 0) lead_sign = sgn(c);
    mpz_class n = abs(c.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (lead_sign == 0) return;
  Rat f(den_lcm * lead_sign, num_gcd);
  f.canonicalize();
  for (Rat& c : row) c *= f;
}

}  // namespace

int row_reduce(RatMatrix& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rank;
    while (sel < rows && is_zero(m[sel][col])) ++sel;
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || is_zero(m[r][col])) continue;
      const Rat a = m[rank][col], b = m[r][col];
      for (size_t c = 0; c < cols; ++c) m[r][c] = m[r][c] * a - m[rank][c] * b;
      strip_row_content(m[r]);
    }
    ++rank;
  }
  // normalize pivots to 1
  for (size_t r = 0; r < rank; ++r) {
    size_t c = 0;
    while (c < cols && is_zero(m[r][c])) ++c;
    if (c == cols) continue;
    const Rat inv = 1 / m[r][c];
    for (size_t k = c; k < cols; ++k) m[r][k] *= inv;
  }
  return static_cast<int>(rank);
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix r = m;
  const size_t cols = m[0].size();
  int rank = row_reduce(r);
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(cols, false);
  for (int i = 0; i < rank; ++i) {
    size_t c = 0;
    while (c < cols && is_zero(r[i][c])) ++c;
    pivot_col[i] = static_cast<int>(c);
    is_pivot[c] = true;
  }
  std::vector<std::vector<Rat>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = Rat(1);
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Poly poly_det(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
  Vars vars = m[0][0].vars();
  Poly prev = Poly::constant(vars, Rat(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t sel = k + 1;
      while (sel < n && m[sel][k].is_zero()) ++sel;
      if (sel == n) return Poly::zero(vars);
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = num.exact_div(prev);
        if (!q) throw std::logic_error("poly_det: Bareiss division failed");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly::zero(vars);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

std::vector<Poly> solve_cramer_poly(const std::vector<std::vector<Poly>>& a,
                                    const std::vector<Poly>& b) {
  const size_t n = a.size();
  if (n == 0 || a[0].size() != n || b.size() != n)
    throw std::invalid_argument("solve_cramer_poly: shape mismatch");
  Poly det = poly_det(a);
  if (det.is_zero()) throw SolveError("solve_cramer_poly: singular matrix");
  std::vector<Poly> x;
  x.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    auto ai = a;
    for (size_t r = 0; r < n; ++r) ai[r][i] = b[r];
    Poly di = poly_det(std::move(ai));
    auto q = di.exact_div(det);
    if (!q)
      throw SolveError("solve_cramer_poly: solution component " +
                       std::to_string(i) + " is not polynomial");
    x.push_back(std::move(*q));
  }
  return x;
}

std::vector<RatFunc> solve_linear(std::vector<std::vector<RatFunc>> a,
                                  std::vector<RatFunc> b) {
  const size_t n = a.size();
  if (n == 0 || a[0].size() != n || b.size() != n)
    throw std::invalid_argument("solve_linear: shape mismatch");
  size_t rank = 0;
  for (size_t col = 0; col < n; ++col) {
    size_t sel = rank;
    while (sel < n && a[sel][col].is_zero()) ++sel;
    if (sel == n) continue;
    std::swap(a[rank], a[sel]);
    std::swap(b[rank], b[sel]);
    const RatFunc piv = a[rank][col];
    for (size_t c = 0; c < n; ++c) a[rank][c] = a[rank][c] / piv;
    b[rank] = b[rank] / piv;
    for (size_t r = 0; r < n; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const RatFunc f = a[r][col];
      for (size_t c = 0; c < n; ++c) a[r][c] = a[r][c] - f * a[rank][c];
      b[r] = b[r] - f * b[rank];
    }
    ++rank;
  }
  if (rank < n)
    throw SolveError("solve_linear: singular matrix, rank " +
                     std::to_string(rank) + " of " + std::to_string(n));
  return b;
}

}  // namespace minorbit
