#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "minorbit/rational.hpp"

namespace minorbit {

enum class Family { A, D, E };

struct LieType {
  Family family;
  int rank;

  /// Parses "A3", "D4", "E6" style names. Throws on invalid rank for the
  /// family (D needs rank >= 4, E needs rank in {6,7,8}).
  static LieType parse(const std::string& s);
  static LieType make(Family f, int rank);
  std::string str() const;
  bool operator==(const LieType& o) const {
    return family == o.family && rank == o.rank;
  }
};

// Integer vector over the simple-root basis (Bourbaki numbering).
using Weight = std::vector<int>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
long weight_height(const Weight& a);

struct WeightHash {
  size_t operator()(const Weight& w) const {
    size_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Exact root-system data for the simply-laced types. Immutable after
/// construction; safe to share across threads.
class RootSystem {
 public:
  static RootSystem build(LieType t);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Positive roots ordered by (height, lex); simple roots come first.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const Weight& highest_root() const { return highest_root_; }
  /// Sum of the positive roots; delta itself is half of this.
  const Weight& two_delta() const { return two_delta_; }

  Weight simple_root(int i) const;
  /// Inner product with (alpha_i, alpha_j) = cartan[i][j]; every root has
  /// squared length 2 in this normalization.
  long inner(const Weight& u, const Weight& v) const;
  bool is_positive_root(const Weight& w) const {
    return root_index_.count(w) > 0;
  }
  bool is_root(const Weight& w) const;
  int root_index(const Weight& w) const;  // index into positive_roots, -1 if absent

  long num_positive_roots() const { return static_cast<long>(positive_roots_.size()); }
  long dim_g() const { return rank_ + 2 * num_positive_roots(); }

 private:
  RootSystem() = default;
  LieType type_{Family::A, 1};
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Weight> positive_roots_;
  Weight highest_root_, two_delta_;
  std::unordered_map<Weight, int, WeightHash> root_index_;
};

/// Bimultiplicative sign function on the root lattice, built from a Dynkin
/// diagram orientation: eps(a_i, a_j) = -1 when i = j or the edge is oriented
/// i -> j, and +1 otherwise.
class AsymmetryFunction {
 public:
  /// Default orientation: the fixed E6 orientation (3->1, 4->2, 4->3, 4->5,
  /// 5->6) for E6; every other type orients edges from lower to higher index.
  static AsymmetryFunction standard(const RootSystem& rs);
  /// Orientation given as directed edges (i, j) meaning i -> j (0-based).
  static AsymmetryFunction from_edges(const RootSystem& rs,
                                      const std::vector<std::pair<int, int>>& edges);

  int eps(const Weight& a, const Weight& b) const;
  const std::vector<std::vector<int>>& sign_matrix() const { return s_; }
  /// Stable fingerprint of the orientation (cache keying).
  std::string fingerprint() const;

 private:
  std::vector<std::vector<int>> s_;  // s[i][j] = 1 iff eps(a_i, a_j) = -1
};

}  // namespace minorbit
