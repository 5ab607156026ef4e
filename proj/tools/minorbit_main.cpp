// Command-line surface: exact tables and verification reports with stable,
// machine-readable output. Exit codes: 0 success/verified, 1 verification
// mismatch, 2 usage or construction errors.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "minorbit/cache.hpp"
#include "minorbit/cohomology.hpp"
#include "minorbit/hikita.hpp"
#include "minorbit/joseph.hpp"
#include "minorbit/reference_tables.hpp"
#include "minorbit/serialize.hpp"
#include "minorbit/weights.hpp"

namespace mo = minorbit;

namespace {

struct Options {
  std::string format = "text";
  std::string cache_dir;
  std::string orientation;
  bool allow_heavy = false;
  int threads = 1;
};

std::vector<std::pair<int, int>> parse_orientation(const std::string& s) {
  std::vector<std::pair<int, int>> edges;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    size_t arrow = item.find('>');
    if (arrow == std::string::npos)
      throw std::invalid_argument("orientation items look like 3>1");
    int a = std::stoi(item.substr(0, arrow));
    int b = std::stoi(item.substr(arrow + 1));
    edges.push_back({a - 1, b - 1});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return edges;
}

mo::ClosureOptions closure_options(const Options& o) {
  mo::ClosureOptions c;
  c.allow_heavy = o.allow_heavy;
  if (!o.cache_dir.empty()) c.cache_dir = o.cache_dir;
  if (!o.orientation.empty()) c.orientation = parse_orientation(o.orientation);
  return c;
}

void emit_json(const nlohmann::ordered_json& j) { std::cout << j.dump(1) << "\n"; }

std::string weight_str(const mo::Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

int cmd_roots(const std::string& type_str, const Options& o) {
  mo::LieType t = mo::LieType::parse(type_str);
  mo::RootSystem rs = mo::RootSystem::build(t);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = mo::kSchemaVersion;
    j["type"] = t.str();
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan();
    j["positive_roots"] = rs.positive_roots();
    j["highest_root"] = rs.highest_root();
    j["two_delta"] = rs.two_delta();
    emit_json(j);
    return 0;
  }
  std::cout << t.str() << ": rank " << rs.rank() << ", "
            << rs.num_positive_roots() << " positive roots, dim g = "
            << rs.dim_g() << "\n";
  std::cout << "cartan matrix:\n";
  for (const auto& row : rs.cartan()) {
    std::cout << " ";
    for (int x : row) std::cout << " " << x;
    std::cout << "\n";
  }
  std::cout << "positive roots (coordinates over the simple roots):\n";
  for (const auto& r : rs.positive_roots())
    std::cout << "  " << weight_str(r) << "\n";
  std::cout << "highest root: " << weight_str(rs.highest_root()) << "\n";
  std::cout << "two delta:    " << weight_str(rs.two_delta()) << "\n";
  return 0;
}

int cmd_freudenthal(const std::string& type_str, const std::string& weight_tag,
                    const Options& o) {
  mo::LieType t = mo::LieType::parse(type_str);
  mo::RootSystem rs = mo::RootSystem::build(t);
  mo::Weight lambda = rs.highest_root();
  if (weight_tag == "2theta") lambda = mo::weight_add(lambda, lambda);
  else if (weight_tag != "theta")
    throw std::invalid_argument("--weight takes 2theta or theta");

  nlohmann::ordered_json j;
  std::string key = "freudenthal_" + t.str() + "_" + weight_tag;
  auto dir = mo::resolve_cache_dir(o.cache_dir.empty()
                                       ? std::optional<std::string>{}
                                       : std::optional<std::string>{o.cache_dir});
  bool cached = false;
  if (dir) {
    if (auto hit = mo::cache_load(*dir, key)) {
      j = nlohmann::ordered_json(std::move(*hit));
      cached = true;
    }
  }
  if (!cached) {
    mo::WeightTable tab = mo::freudenthal_table(rs, lambda);
    j = mo::weight_table_to_json(rs, tab);
    if (dir) mo::cache_store(*dir, key, j);
  }
  if (o.format == "json") {
    emit_json(j);
    return 0;
  }
  mpz_class weyl = mo::weyl_dim(rs, lambda);
  std::cout << t.str() << " V(" << weight_tag << "), highest weight "
            << weight_str(j["highest"].get<mo::Weight>()) << "\n";
  std::cout << "m(0) = " << j["zero_mult"].get<long long>() << "\n";
  std::cout << "dominant weights: " << j["dominant_weights"].size() << "\n";
  std::cout << "dim V = " << j["dim"].get<std::string>() << "\n";
  std::cout << "dim matches the Weyl dimension formula: "
            << (j["dim"].get<std::string>() == weyl.get_str() ? "yes" : "NO")
            << "\n";
  return 0;
}

int cmd_pairing(const std::string& type_str, const Options& o) {
  mo::LieType t = mo::LieType::parse(type_str);
  if (t.family == mo::Family::A) {
    auto d = mo::an_fixed_point_data(t.rank);
    auto one = mo::ring_element_zero(t.rank, d.vars);
    one.c0 = mo::Poly::constant(d.vars, mo::Rat(1));
    auto basis = [&](int i) {
      auto e = mo::ring_element_zero(t.rank, d.vars);
      e.c[i] = mo::Poly::constant(d.vars, mo::Rat(1));
      return e;
    };
    if (o.format == "json") {
      nlohmann::ordered_json j;
      j["schema_version"] = mo::kSchemaVersion;
      j["type"] = t.str();
      j["pair_1_1"] = mo::an_pairing(d, one, one).str();
      auto arr = nlohmann::ordered_json::array();
      for (int i = 0; i < t.rank; ++i)
        arr.push_back(mo::an_pairing(d, one, basis(i)).str());
      j["pair_1_e"] = std::move(arr);
      auto gram = nlohmann::ordered_json::array();
      for (int i = 0; i < t.rank; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 0; k < t.rank; ++k)
          row.push_back(mo::an_pairing(d, basis(i), basis(k)).str());
        gram.push_back(std::move(row));
      }
      j["gram"] = std::move(gram);
      emit_json(j);
      return 0;
    }
    std::cout << "<1,1> = " << mo::an_pairing(d, one, one).str() << "\n";
    for (int i = 0; i < t.rank; ++i)
      std::cout << "<1,e" << i + 1
                << "> = " << mo::an_pairing(d, one, basis(i)).str() << "\n";
    std::cout << "gram matrix <e_i,e_j>:\n";
    for (int i = 0; i < t.rank; ++i) {
      std::cout << " ";
      for (int k = 0; k < t.rank; ++k)
        std::cout << " " << mo::an_pairing(d, basis(i), basis(k)).str();
      std::cout << "\n";
    }
    return 0;
  }
  mo::RootSystem rs = mo::RootSystem::build(t);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = mo::kSchemaVersion;
    j["type"] = t.str();
    auto gram = nlohmann::ordered_json::array();
    for (int i = 0; i < t.rank; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int k = 0; k < t.rank; ++k) row.push_back(-rs.cartan()[i][k]);
      gram.push_back(std::move(row));
    }
    j["gram"] = std::move(gram);
    emit_json(j);
    return 0;
  }
  std::cout << "intersection pairing = minus the Cartan matrix:\n";
  for (int i = 0; i < t.rank; ++i) {
    std::cout << " ";
    for (int k = 0; k < t.rank; ++k) std::cout << " " << -rs.cartan()[i][k];
    std::cout << "\n";
  }
  return 0;
}

void emit_table(const mo::MultiplicationTable& tab, char basis,
                const Options& o) {
  if (o.format == "json") {
    emit_json(mo::table_to_json(tab));
    return;
  }
  if (o.format == "csv") {
    std::cout << "i,j,c0";
    for (int k = 0; k < tab.n; ++k) std::cout << ",c" << k + 1;
    std::cout << "\n";
    for (const auto& [key, e] : tab.entries) {
      std::cout << key.first + 1 << "," << key.second + 1 << ",\""
                << e.c0.str() << "\"";
      for (const auto& p : e.c) std::cout << ",\"" << p.str() << "\"";
      std::cout << "\n";
    }
    return;
  }
  for (const auto& [key, e] : tab.entries)
    std::cout << basis << key.first + 1 << "*" << basis << key.second + 1
              << " = " << mo::ring_element_str(e, basis) << "\n";
}

int cmd_mult_table(const std::string& kind, const std::string& type_str,
                   const Options& o) {
  mo::LieType t = mo::LieType::parse(type_str);
  if (kind == "cohomology") {
    mo::MultiplicationTable tab;
    if (t.family == mo::Family::A) {
      tab = mo::an_cup_table(t.rank, o.threads);
    } else {
      mo::RootSystem rs = mo::RootSystem::build(t);
      tab = mo::bg_cup_table(rs, mo::group_order(t));
    }
    emit_table(tab, 'e', o);
    return 0;
  }
  if (kind == "balgebra") {
    mo::BAlgebra b = mo::build_b_algebra(t, closure_options(o));
    emit_table(b.table, 'h', o);
    return 0;
  }
  throw std::invalid_argument("mult-table kind is cohomology or balgebra");
}

int cmd_verify(const std::string& type_str, const std::string& coh_str,
               const std::string& balg_str, const Options& o) {
  mo::LieType t = mo::LieType::parse(type_str);
  mo::CohomologySource coh;
  if (coh_str == "default")
    coh = mo::default_cohomology_source(t);
  else if (coh_str == "localization")
    coh = mo::CohomologySource::kLocalization;
  else if (coh_str == "bg")
    coh = mo::CohomologySource::kBg;
  else
    throw std::invalid_argument("--cohomology takes localization or bg");
  mo::BAlgebraSource balg;
  if (balg_str == "closure")
    balg = mo::BAlgebraSource::kClosure;
  else if (balg_str == "paper")
    balg = mo::BAlgebraSource::kReference;
  else
    throw std::invalid_argument("--balgebra takes closure or paper");

  mo::Report r = mo::verify_isomorphism(t, coh, balg, closure_options(o));
  if (o.format == "json")
    emit_json(mo::report_to_json(r));
  else
    std::cout << mo::report_text(r);
  return r.verdict ? 0 : 1;
}

int cmd_errata(const std::string& type_str, const Options& o) {
  mo::LieType t = mo::LieType::parse(type_str);
  auto entries = mo::compute_errata(t, closure_options(o));
  if (o.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
      nlohmann::ordered_json j;
      j["type"] = e.type;
      j["side"] = e.side;
      j["entry"] = e.entry;
      j["paper_value"] = e.reference_value;
      j["computed_value"] = e.computed_value;
      arr.push_back(std::move(j));
    }
    nlohmann::ordered_json j;
    j["schema_version"] = mo::kSchemaVersion;
    j["type"] = t.str();
    j["errata"] = std::move(arr);
    emit_json(j);
    return 0;
  }
  if (entries.empty()) {
    std::cout << t.str() << ": no differences against the published tables\n";
    return 0;
  }
  for (const auto& e : entries) {
    std::cout << e.type << " " << e.side << " " << e.entry << "\n";
    std::cout << "  published: " << e.reference_value << "\n";
    std::cout << "  computed:  " << e.computed_value << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-sided tables for ADE minimal resolutions and "
               "minimal-orbit quantizations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", o.cache_dir,
                 "cache directory (also: MINORBIT_CACHE_DIR)");
  app.add_flag("--allow-heavy", o.allow_heavy,
               "run the large E7/E8 ideal closures");
  app.add_option("--threads", o.threads, "worker cap for table construction")
      ->check(CLI::PositiveNumber);
  app.add_option("--orientation", o.orientation,
                 "Dynkin orientation as directed edges, e.g. 3>1,4>3");

  std::string type_str, weight_tag = "2theta", kind;
  std::string coh_str = "default", balg_str = "closure";

  auto* roots = app.add_subcommand("roots", "Cartan matrix and positive roots");
  roots->add_option("type", type_str)->required();

  auto* freud = app.add_subcommand("freudenthal", "weight multiplicities");
  freud->add_option("type", type_str)->required();
  freud->add_option("--weight", weight_tag, "2theta or theta");

  auto* pairing = app.add_subcommand("pairing", "equivariant Poincare pairing");
  pairing->add_option("type", type_str)->required();

  auto* mult = app.add_subcommand("mult-table", "multiplication tables");
  mult->add_option("kind", kind, "cohomology or balgebra")->required();
  mult->add_option("type", type_str)->required();

  auto* verify = app.add_subcommand("verify", "compare the two sides");
  verify->add_option("type", type_str)->required();
  verify->add_option("--cohomology", coh_str, "localization or bg");
  verify->add_option("--balgebra", balg_str, "closure or paper");

  auto* errata = app.add_subcommand("errata", "published-vs-computed diffs");
  errata->add_option("type", type_str)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(type_str, o);
    if (freud->parsed()) return cmd_freudenthal(type_str, weight_tag, o);
    if (pairing->parsed()) return cmd_pairing(type_str, o);
    if (mult->parsed()) return cmd_mult_table(kind, type_str, o);
    if (verify->parsed()) return cmd_verify(type_str, coh_str, balg_str, o);
    if (errata->parsed()) return cmd_errata(type_str, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
