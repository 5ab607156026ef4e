#pragma once

#include <string>
#include <vector>

#include "minorbit/cohomology.hpp"
#include "minorbit/joseph.hpp"

namespace minorbit {

/// Quotient-table relations as published, transcribed verbatim (including the
/// suspect entries); over {z, hbar} for type A, {hbar} otherwise. Used as
/// cross-check fixtures and as one side of the errata report, never as the
/// computation path.
MultiplicationTable reference_balgebra_table(LieType t);

/// Published cup-product tables: the A_n closed forms, the D_n corollary as
/// printed, and the literal E6/E7/E8 tables.
MultiplicationTable reference_cohomology_table(LieType t);

/// Published quadratic-term pairs (as root coordinate pairs) of the
/// lowest-weight generator for E6/E7/E8.
std::vector<std::pair<Weight, Weight>> reference_lwv_pairs(LieType t);

struct ErrataEntry {
  std::string type;
  std::string side;   // "cohomology" | "balgebra" | "substitution" | "generator"
  std::string entry;  // e.g. "e2*e4", "h1*h3", "t1", "term 5"
  std::string reference_value;
  std::string computed_value;
};

/// Entry-by-entry diff of two tables on the same basis.
std::vector<ErrataEntry> table_diff(const MultiplicationTable& reference,
                                    const MultiplicationTable& computed,
                                    const std::string& side,
                                    char basis_letter);

/// Differences between the published tables/formulas and the computed ones
/// for one type: cohomology side, quotient side, the type-A substitution and
/// the E8 generator terms.
std::vector<ErrataEntry> compute_errata(LieType t, const ClosureOptions& opt);

}  // namespace minorbit
