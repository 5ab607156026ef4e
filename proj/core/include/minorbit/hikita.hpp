#pragma once

#include <map>
#include <string>

#include "minorbit/cohomology.hpp"
#include "minorbit/joseph.hpp"
#include <nlohmann/json.hpp>

namespace minorbit {

enum class CohomologySource { kLocalization, kBg };
enum class BAlgebraSource { kClosure, kReference };

CohomologySource default_cohomology_source(LieType t);

/// Variable and basis identification between the two sides. For type A the
/// cup-product table is carried into the quotient ring by
///   t1 -> -z hbar/(n+1),  t2 -> (z+n+1) hbar/(n+1),  e_k -> h_k;
/// (the sign on the t1 image corrects the published map, which fails already
/// at rank 1 -- see the errata report). For D/E the quotient table is carried
/// into the cohomology ring by hbar -> 2t, h_k -> e_k.
struct SubstitutionMap {
  LieType type{Family::A, 1};
  Vars source, target;
  std::vector<Poly> images;          // per source variable
  bool balgebra_to_cohomology = false;

  Poly apply(const Poly& p) const { return p.substitute(images); }
  RingElement apply(const RingElement& e) const;
};

SubstitutionMap substitution_map(LieType t);

/// Per-pair comparison outcome of the two multiplication tables under the
/// substitution; `difference` is in the comparison ring.
struct Report {
  LieType type{Family::A, 1};
  CohomologySource cohomology_source = CohomologySource::kLocalization;
  BAlgebraSource balgebra_source = BAlgebraSource::kClosure;
  std::map<std::pair<int, int>, RingElement> mismatches;  // empty on match
  long pair_count = 0;
  bool verdict = false;
  double seconds = 0;  // not serialized; outputs stay byte-identical
};

Report verify_isomorphism(LieType t,
                          CohomologySource coh = CohomologySource::kLocalization,
                          BAlgebraSource balg = BAlgebraSource::kClosure,
                          const ClosureOptions& opt = {});

/// Comparison core of verify_isomorphism, on already-built tables.
Report compare_tables(LieType t, const MultiplicationTable& coh_table,
                      const MultiplicationTable& b_table,
                      CohomologySource coh, BAlgebraSource balg);

std::string report_text(const Report& r);
nlohmann::ordered_json report_to_json(const Report& r);

}  // namespace minorbit
