#pragma once

#include <unordered_map>
#include <vector>

#include "minorbit/rootsystem.hpp"

namespace minorbit {

/// Weight multiplicities of the irreducible module V(lambda), stored on
/// dominant weights only; general weights go through their dominant
/// representative (multiplicities are Weyl-invariant).
struct WeightTable {
  LieType type{Family::A, 1};
  Weight highest;
  /// Dominant weights sorted by (level, lex), level = ht(lambda - mu).
  std::vector<std::pair<Weight, long long>> dominant;
  std::unordered_map<Weight, long long, WeightHash> index;

  long long mult_dominant(const Weight& mu) const {
    auto it = index.find(mu);
    return it == index.end() ? 0 : it->second;
  }
};

/// Applies simple reflections until the weight is dominant.
Weight dominantize(const RootSystem& rs, Weight w);

/// Multiplicity table of V(lambda) for dominant lambda in the root lattice,
/// computed by the Freudenthal recursion over dominant weights with
/// Weyl-orbit lookups on the right-hand side. Exact integer arithmetic.
WeightTable freudenthal_table(const RootSystem& rs, const Weight& lambda);

long long table_mult(const RootSystem& rs, const WeightTable& t, const Weight& w);

long long zero_weight_multiplicity(const RootSystem& rs, const Weight& lambda);

/// dim(Sym^2 g)_0 - dim V(2 theta)_0 computed from the actual multiplicity.
long long dim_i2_zero(const RootSystem& rs);

/// Weyl dimension formula for V(lambda).
mpz_class weyl_dim(const RootSystem& rs, const Weight& lambda);

mpz_class weyl_group_order(const RootSystem& rs);

/// Orbit size |W . mu| for dominant mu (index of the stabilizer parabolic).
mpz_class orbit_size(const RootSystem& rs, const Weight& dominant_mu);

/// Sum of mult * orbit over the table; equals dim V(lambda).
mpz_class table_total_dim(const RootSystem& rs, const WeightTable& t);

}  // namespace minorbit
