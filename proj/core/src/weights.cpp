#include "minorbit/weights.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace minorbit {

Weight dominantize(const RootSystem& rs, Weight w) {
  const int n = rs.rank();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      long ip = 0;
      for (int k = 0; k < n; ++k)
        ip += static_cast<long>(rs.cartan()[i][k]) * w[k];
      if (ip < 0) {
        w[i] -= static_cast<int>(ip);
        changed = true;
      }
    }
  }
  return w;
}

namespace {

bool is_dominant(const RootSystem& rs, const Weight& w) {
  const int n = rs.rank();
  for (int i = 0; i < n; ++i) {
    long ip = 0;
    for (int k = 0; k < n; ++k) ip += static_cast<long>(rs.cartan()[i][k]) * w[k];
    if (ip < 0) return false;
  }
  return true;
}

// All dominant mu with lambda - mu in the nonnegative span of simple roots.
// Dominant weights of the root lattice have nonnegative coordinates, so the
// search box is 0 <= mu_i <= lambda_i, walked with partial-sum pruning.
std::vector<Weight> dominant_below(const RootSystem& rs, const Weight& lambda) {
  const int n = rs.rank();
  const auto& C = rs.cartan();
  // upper bound on the future contribution to row j from coordinates > i
  std::vector<std::vector<long>> ub(n, std::vector<long>(n + 1, 0));
  for (int j = 0; j < n; ++j)
    for (int i = n - 1; i >= 0; --i) {
      long add = C[j][i] > 0 ? static_cast<long>(C[j][i]) * lambda[i] : 0;
      ub[j][i] = ub[j][i + 1] + add;
    }
  std::vector<Weight> out;
  Weight m(n, 0);
  std::vector<long> s(n, 0);  // s[j] = sum_{k < i} C[j][k] m[k]
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (int v = 0; v <= lambda[i]; ++v) {
      m[i] = v;
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        long sj = s[j] + static_cast<long>(C[j][i]) * v;
        if (sj + ub[j][i + 1] < 0) ok = false;
      }
      if (ok) {
        for (int j = 0; j < n; ++j) s[j] += static_cast<long>(C[j][i]) * v;
        rec(i + 1);
        for (int j = 0; j < n; ++j) s[j] -= static_cast<long>(C[j][i]) * v;
      }
    }
    m[i] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

WeightTable freudenthal_table(const RootSystem& rs, const Weight& lambda) {
  const int n = rs.rank();
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("freudenthal: weight size mismatch");
  if (!is_dominant(rs, lambda))
    throw std::invalid_argument("freudenthal: highest weight must be dominant");

  WeightTable t;
  t.type = rs.type();
  t.highest = lambda;

  auto doms = dominant_below(rs, lambda);
  std::sort(doms.begin(), doms.end(), [&](const Weight& a, const Weight& b) {
    long la = weight_height(lambda) - weight_height(a);
    long lb = weight_height(lambda) - weight_height(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  std::unordered_map<Weight, long long, WeightHash> mult;
  const Weight& D = rs.two_delta();
  const long lam_norm = rs.inner(lambda, lambda) + rs.inner(lambda, D);

  for (const Weight& mu : doms) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    // 2 * sum_{a>0} sum_{i>=1} m(mu + i a) (mu + i a, a)
    long long rhs = 0;
    for (const Weight& a : rs.positive_roots()) {
      Weight nu = mu;
      for (int i = 1;; ++i) {
        nu = weight_add(nu, a);
        Weight dom = dominantize(rs, nu);
        auto it = mult.find(dom);
        if (it == mult.end()) break;  // weight strings are unbroken
        rhs += 2 * it->second * rs.inner(nu, a);
      }
    }
    const long denom = lam_norm - rs.inner(mu, mu) - rs.inner(mu, D);
    if (denom <= 0)
      throw std::logic_error("freudenthal: nonpositive denominator");
    if (rhs % denom != 0)
      throw std::logic_error("freudenthal: non-integer multiplicity");
    long long m = rhs / denom;
    if (m > 0) mult[mu] = m;
  }
  for (const Weight& mu : doms) {
    auto it = mult.find(mu);
    if (it != mult.end()) {
      t.dominant.push_back({mu, it->second});
      t.index[mu] = it->second;
    }
  }
  return t;
}

long long table_mult(const RootSystem& rs, const WeightTable& t, const Weight& w) {
  return t.mult_dominant(dominantize(rs, w));
}

long long zero_weight_multiplicity(const RootSystem& rs, const Weight& lambda) {
  auto t = freudenthal_table(rs, lambda);
  return t.mult_dominant(Weight(rs.rank(), 0));
}

long long dim_i2_zero(const RootSystem& rs) {
  const int n = rs.rank();
  Weight two_theta = weight_add(rs.highest_root(), rs.highest_root());
  long long m0 = zero_weight_multiplicity(rs, two_theta);
  long long sym2g0 = (rs.dim_g() - n) / 2 + static_cast<long long>(n) * (n + 1) / 2;
  return sym2g0 - m0;
}

mpz_class weyl_dim(const RootSystem& rs, const Weight& lambda) {
  // prod (lambda + delta, a) / (delta, a) = prod (2 lambda + D, a) / (D, a)
  const Weight& D = rs.two_delta();
  Weight top = weight_add(weight_add(lambda, lambda), D);
  mpz_class num = 1, den = 1;
  for (const Weight& a : rs.positive_roots()) {
    num *= rs.inner(top, a);
    den *= rs.inner(D, a);
  }
  if (num % den != 0) throw std::logic_error("weyl_dim: non-integer result");
  return num / den;
}

namespace {

mpz_class factorial(int k) {
  mpz_class r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Weyl order of one connected simply-laced diagram given by its adjacency.
mpz_class component_weyl_order(const std::vector<int>& nodes,
                               const std::vector<std::vector<bool>>& adj) {
  const int k = static_cast<int>(nodes.size());
  int branch = -1;
  for (int v : nodes) {
    int deg = 0;
    for (int w : nodes)
      if (w != v && adj[v][w]) ++deg;
    if (deg >= 3) branch = v;
  }
  if (branch < 0) return factorial(k + 1);  // A_k
  // arm lengths from the branch node
  std::vector<int> arms;
  for (int w : nodes) {
    if (w == branch || !adj[branch][w]) continue;
    int len = 1, prev = branch, cur = w;
    for (;;) {
      int next = -1;
      for (int u : nodes)
        if (u != prev && u != cur && adj[cur][u]) next = u;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::logic_error("unexpected diagram shape");
  if (arms[0] == 1 && arms[1] == 1) {
    mpz_class r = factorial(k);
    mpz_class two_pow = 1;
    for (int i = 0; i < k - 1; ++i) two_pow *= 2;
    return two_pow * r;  // D_k
  }
  if (arms == std::vector<int>{1, 2, 2}) return 51840;       // E6
  if (arms == std::vector<int>{1, 2, 3}) return 2903040;     // E7
  if (arms == std::vector<int>{1, 2, 4}) return 696729600;   // E8
  throw std::logic_error("unexpected diagram shape");
}

mpz_class parabolic_order(const RootSystem& rs, const std::vector<int>& nodes) {
  const int n = rs.rank();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rs.cartan()[i][j] != 0) adj[i][j] = true;
  std::vector<bool> in(n, false);
  for (int v : nodes) in[v] = true;
  std::vector<bool> seen(n, false);
  mpz_class order = 1;
  for (int v : nodes) {
    if (seen[v]) continue;
    std::vector<int> comp, stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y = 0; y < n; ++y)
        if (in[y] && !seen[y] && adj[x][y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    order *= component_weyl_order(comp, adj);
  }
  return order;
}

}  // namespace

mpz_class weyl_group_order(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) all[i] = i;
  return parabolic_order(rs, all);
}

mpz_class orbit_size(const RootSystem& rs, const Weight& mu) {
  const int n = rs.rank();
  std::vector<int> stab;
  for (int i = 0; i < n; ++i) {
    long ip = 0;
    for (int k = 0; k < n; ++k) ip += static_cast<long>(rs.cartan()[i][k]) * mu[k];
    if (ip < 0) throw std::invalid_argument("orbit_size: weight not dominant");
    if (ip == 0) stab.push_back(i);
  }
  return weyl_group_order(rs) / parabolic_order(rs, stab);
}

mpz_class table_total_dim(const RootSystem& rs, const WeightTable& t) {
  mpz_class total = 0;
  for (const auto& [mu, m] : t.dominant) total += orbit_size(rs, mu) * mpz_class(static_cast<long>(m));
  return total;
}

}  // namespace minorbit
