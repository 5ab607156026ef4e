#include "minorbit/hikita.hpp"

#include <chrono>

#include "minorbit/reference_tables.hpp"
#include "minorbit/serialize.hpp"

namespace minorbit {

CohomologySource default_cohomology_source(LieType t) {
  return t.family == Family::A ? CohomologySource::kLocalization
                               : CohomologySource::kBg;
}

RingElement SubstitutionMap::apply(const RingElement& e) const {
  RingElement out;
  out.c0 = apply(e.c0);
  out.c.reserve(e.c.size());
  for (const Poly& p : e.c) out.c.push_back(apply(p));
  return out;
}

SubstitutionMap substitution_map(LieType t) {
  SubstitutionMap m;
  m.type = t;
  if (t.family == Family::A) {
    const int n = t.rank;
    m.source = make_vars({"t1", "t2"});
    m.target = make_vars({"z", "hbar"});
    Poly z = Poly::variable(m.target, 0);
    Poly hb = Poly::variable(m.target, 1);
    m.images = {(z * hb).scaled(Rat(-1, n + 1)),
                (z * hb).scaled(Rat(1, n + 1)) + hb};
    m.balgebra_to_cohomology = false;
  } else {
    m.source = make_vars({"hbar"});
    m.target = make_vars({"t"});
    m.images = {Poly::variable(m.target, 0).scaled(frac(2))};
    m.balgebra_to_cohomology = true;
  }
  return m;
}

Report verify_isomorphism(LieType t, CohomologySource coh, BAlgebraSource balg,
                          const ClosureOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  if (coh == CohomologySource::kLocalization && t.family != Family::A)
    throw std::invalid_argument(
        "localization cohomology is only defined for type A");

  MultiplicationTable coh_table;
  if (coh == CohomologySource::kLocalization) {
    coh_table = an_cup_table(t.rank);
  } else {
    RootSystem rs = RootSystem::build(t);
    coh_table = bg_cup_table(rs, group_order(t));
  }

  MultiplicationTable b_table = balg == BAlgebraSource::kClosure
                                    ? build_b_algebra(t, opt).table
                                    : reference_balgebra_table(t);

  Report r = compare_tables(t, coh_table, b_table, coh, balg);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

Report compare_tables(LieType t, const MultiplicationTable& coh_table,
                      const MultiplicationTable& b_table, CohomologySource coh,
                      BAlgebraSource balg) {
  SubstitutionMap sub = substitution_map(t);
  Report r;
  r.type = t;
  r.cohomology_source = coh;
  r.balgebra_source = balg;
  for (const auto& [key, coh_entry] : coh_table.entries) {
    const RingElement& b_entry = b_table.entry(key.first, key.second);
    RingElement diff = sub.balgebra_to_cohomology
                           ? sub.apply(b_entry) - coh_entry
                           : sub.apply(coh_entry) - b_entry;
    ++r.pair_count;
    if (!diff.is_zero()) r.mismatches[key] = std::move(diff);
  }
  r.verdict = r.mismatches.empty();
  return r;
}

namespace {

const char* coh_name(CohomologySource s) {
  return s == CohomologySource::kLocalization ? "localization" : "bg";
}
const char* balg_name(BAlgebraSource s) {
  return s == BAlgebraSource::kClosure ? "closure" : "paper";
}

}  // namespace

std::string report_text(const Report& r) {
  std::string out = "verify " + r.type.str() + " (cohomology=" +
                    coh_name(r.cohomology_source) + ", balgebra=" +
                    balg_name(r.balgebra_source) + ")\n";
  if (r.verdict) {
    out += "all " + std::to_string(r.pair_count) + " pairs match\n";
  } else {
    out += std::to_string(r.mismatches.size()) + " of " +
           std::to_string(r.pair_count) + " pairs mismatch:\n";
    for (const auto& [key, diff] : r.mismatches)
      out += "  (" + std::to_string(key.first + 1) + "," +
             std::to_string(key.second + 1) +
             "): difference = " + ring_element_str(diff, 'b') + "\n";
  }
  out += r.verdict ? "verdict: match\n" : "verdict: mismatch\n";
  return out;
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = r.type.str();
  j["cohomology_source"] = coh_name(r.cohomology_source);
  j["balgebra_source"] = balg_name(r.balgebra_source);
  j["pair_count"] = r.pair_count;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [key, diff] : r.mismatches) {
    nlohmann::ordered_json p;
    p["i"] = key.first + 1;
    p["j"] = key.second + 1;
    p["status"] = "mismatch";
    p["difference"] = ring_element_to_json(diff);
    pairs.push_back(std::move(p));
  }
  j["mismatches"] = std::move(pairs);
  j["verdict"] = r.verdict ? "match" : "mismatch";
  return j;
}

}  // namespace minorbit
