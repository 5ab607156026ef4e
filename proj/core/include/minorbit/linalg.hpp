#pragma once

#include <stdexcept>
#include <vector>

#include "minorbit/poly.hpp"
#include "minorbit/rational.hpp"

namespace minorbit {

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using RatMatrix = std::vector<std::vector<Rat>>;

/// In-place reduced row echelon form over Q, fraction-free elimination with
/// per-row content stripping; pivot rows end normalized to leading 1.
/// Returns the rank.
int row_reduce(RatMatrix& m);

/// Basis of the right null space of m (vectors of length = #columns).
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

/// Determinant of a square Poly matrix by fraction-free Bareiss elimination.
Poly poly_det(std::vector<std::vector<Poly>> m);

/// Solves A x = b over the fraction field via Cramer determinants, requiring
/// every component to come out polynomial. Throws SolveError when A is
/// singular or a quotient fails to clear its denominator.
std::vector<Poly> solve_cramer_poly(const std::vector<std::vector<Poly>>& a,
                                    const std::vector<Poly>& b);

/// Gaussian elimination over the fraction field. Throws SolveError naming the
/// rank defect when A is singular.
std::vector<RatFunc> solve_linear(std::vector<std::vector<RatFunc>> a,
                                  std::vector<RatFunc> b);

}  // namespace minorbit
