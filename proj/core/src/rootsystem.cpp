#include "minorbit/rootsystem.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorbit {

LieType LieType::make(Family f, int rank) {
  LieType t{f, rank};
  switch (f) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      break;
    case Family::D:
      if (rank < 4) throw std::invalid_argument("type D needs rank >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8)
        throw std::invalid_argument("type E needs rank in {6,7,8}");
      break;
  }
  return t;
}

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad Lie type: " + s);
  Family f;
  switch (s[0]) {
    case 'A': case 'a': f = Family::A; break;
    case 'D': case 'd': f = Family::D; break;
    case 'E': case 'e': f = Family::E; break;
    default: throw std::invalid_argument("bad Lie type family: " + s);
  }
  int rank;
  try {
    size_t pos = 0;
    rank = std::stoi(s.substr(1), &pos);
    if (pos != s.size() - 1) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad Lie type rank: " + s);
  }
  return make(f, rank);
}

std::string LieType::str() const {
  const char* fam = family == Family::A ? "A" : family == Family::D ? "D" : "E";
  return fam + std::to_string(rank);
}

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight weight_neg(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

long weight_height(const Weight& a) {
  long h = 0;
  for (int x : a) h += x;
  return h;
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(LieType t) {
  // 0-based node pairs
  std::vector<std::pair<int, int>> e;
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
      e.push_back({n - 3, n - 1});
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-...-n with 2 attached to 4
      e.push_back({0, 2});
      for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1});
      e.push_back({1, 3});
      break;
  }
  return e;
}

}  // namespace

RootSystem RootSystem::build(LieType t) {
  t = LieType::make(t.family, t.rank);  // re-validate
  RootSystem rs;
  rs.type_ = t;
  rs.rank_ = t.rank;
  const int n = t.rank;
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rs.cartan_[i][i] = 2;
  for (auto [a, b] : dynkin_edges(t)) {
    rs.cartan_[a][b] = -1;
    rs.cartan_[b][a] = -1;
  }

  // closure from the simple roots: r + a_i is a root iff (r, a_i) = -1
  std::unordered_set<Weight, WeightHash> seen;
  std::vector<Weight> frontier;
  for (int i = 0; i < n; ++i) {
    Weight a(n, 0);
    a[i] = 1;
    seen.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& r : frontier) {
      for (int i = 0; i < n; ++i) {
        long ip = 0;
        for (int k = 0; k < n; ++k) ip += static_cast<long>(rs.cartan_[i][k]) * r[k];
        if (ip == -1) {
          Weight s = r;
          s[i] += 1;
          if (seen.insert(s).second) next.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  rs.positive_roots_.assign(seen.begin(), seen.end());
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
            [](const Weight& a, const Weight& b) {
              long ha = weight_height(a), hb = weight_height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  for (size_t i = 0; i < rs.positive_roots_.size(); ++i)
    rs.root_index_[rs.positive_roots_[i]] = static_cast<int>(i);

  long expected = 0;
  switch (t.family) {
    case Family::A: expected = static_cast<long>(n) * (n + 1) / 2; break;
    case Family::D: expected = static_cast<long>(n) * (n - 1); break;
    case Family::E: expected = n == 6 ? 36 : n == 7 ? 63 : 120; break;
  }
  if (static_cast<long>(rs.positive_roots_.size()) != expected)
    throw std::logic_error("root closure produced wrong count for " + t.str());

  rs.highest_root_ = rs.positive_roots_.back();
  rs.two_delta_.assign(n, 0);
  for (const Weight& r : rs.positive_roots_)
    rs.two_delta_ = weight_add(rs.two_delta_, r);
  return rs;
}

Weight RootSystem::simple_root(int i) const {
  Weight a(rank_, 0);
  a[i] = 1;
  return a;
}

long RootSystem::inner(const Weight& u, const Weight& v) const {
  if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
    throw std::invalid_argument("inner: dimension mismatch");
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < rank_; ++j) row += static_cast<long>(cartan_[i][j]) * v[j];
    s += static_cast<long>(u[i]) * row;
  }
  return s;
}

bool RootSystem::is_root(const Weight& w) const {
  if (root_index_.count(w)) return true;
  return root_index_.count(weight_neg(w)) > 0;
}

int RootSystem::root_index(const Weight& w) const {
  auto it = root_index_.find(w);
  return it == root_index_.end() ? -1 : it->second;
}

AsymmetryFunction AsymmetryFunction::standard(const RootSystem& rs) {
  std::vector<std::pair<int, int>> edges;
  if (rs.type().family == Family::E && rs.type().rank == 6) {
    edges = {{2, 0}, {3, 2}, {3, 1}, {3, 4}, {4, 5}};
  } else {
    edges = dynkin_edges(rs.type());  // already lower -> higher
  }
  return from_edges(rs, edges);
}

AsymmetryFunction AsymmetryFunction::from_edges(
    const RootSystem& rs, const std::vector<std::pair<int, int>>& edges) {
  const int n = rs.rank();
  auto diagram = dynkin_edges(rs.type());
  AsymmetryFunction f;
  f.s_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) f.s_[i][i] = 1;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : diagram) adj[a][b] = adj[b][a] = true;
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || !adj[a][b])
      throw std::invalid_argument("orientation edge not in the Dynkin diagram");
    if (covered[a][b])
      throw std::invalid_argument("orientation lists an edge twice");
    covered[a][b] = covered[b][a] = true;
    f.s_[a][b] = 1;
  }
  for (auto [a, b] : diagram)
    if (!covered[a][b])
      throw std::invalid_argument("orientation misses a Dynkin edge");
  return f;
}

int AsymmetryFunction::eps(const Weight& a, const Weight& b) const {
  long e = 0;
  const int n = static_cast<int>(s_.size());
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < n; ++j)
      if (s_[i][j]) row += b[j];
    e += static_cast<long>(a[i]) * row;
  }
  return (e % 2 + 2) % 2 == 0 ? 1 : -1;
}

std::string AsymmetryFunction::fingerprint() const {
  std::string out;
  for (const auto& row : s_)
    for (int x : row) out += static_cast<char>('0' + x);
  return out;
}

}  // namespace minorbit
