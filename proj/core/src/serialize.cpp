#include "minorbit/serialize.hpp"

#include "minorbit/joseph.hpp"

namespace minorbit {

nlohmann::ordered_json poly_to_json(const Poly& p) {
  nlohmann::ordered_json j;
  j["s"] = p.str();
  auto terms = nlohmann::ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::ordered_json term;
    term["e"] = it->first;
    term["c"] = it->second.get_str();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Poly poly_from_json(const Vars& vars, const nlohmann::json& j) {
  Poly p(vars);
  for (const auto& term : j.at("terms")) {
    Expo e = term.at("e").get<Expo>();
    Rat c(term.at("c").get<std::string>());
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

nlohmann::ordered_json ring_element_to_json(const RingElement& e) {
  nlohmann::ordered_json j;
  j["c0"] = poly_to_json(e.c0);
  auto arr = nlohmann::ordered_json::array();
  for (const Poly& p : e.c) arr.push_back(poly_to_json(p));
  j["c"] = std::move(arr);
  return j;
}

nlohmann::ordered_json table_to_json(const MultiplicationTable& t) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = t.type.str();
  j["rank"] = t.n;
  auto vars = nlohmann::ordered_json::array();
  for (size_t i = 0; i < t.vars->size(); ++i) vars.push_back(t.vars->name(i));
  j["base_vars"] = std::move(vars);
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [key, e] : t.entries) {
    nlohmann::ordered_json je;
    je["i"] = key.first + 1;
    je["j"] = key.second + 1;
    je["c0"] = poly_to_json(e.c0);
    auto arr = nlohmann::ordered_json::array();
    for (const Poly& p : e.c) arr.push_back(poly_to_json(p));
    je["c"] = std::move(arr);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

MultiplicationTable table_from_json(const nlohmann::json& j) {
  MultiplicationTable t;
  t.type = LieType::parse(j.at("type").get<std::string>());
  t.n = j.at("rank").get<int>();
  std::vector<std::string> names;
  for (const auto& v : j.at("base_vars")) names.push_back(v.get<std::string>());
  t.vars = make_vars(names);
  for (const auto& je : j.at("entries")) {
    RingElement e;
    e.c0 = poly_from_json(t.vars, je.at("c0"));
    for (const auto& jc : je.at("c")) e.c.push_back(poly_from_json(t.vars, jc));
    t.set(je.at("i").get<int>() - 1, je.at("j").get<int>() - 1, std::move(e));
  }
  return t;
}

nlohmann::ordered_json balgebra_to_json(const BAlgebra& b) {
  nlohmann::ordered_json j = table_to_json(b.table);
  j["weight_zero_dim"] = b.weight_zero_dim;
  j["total_dim"] = b.total_dim;
  return j;
}

BAlgebra balgebra_from_json(const nlohmann::json& j) {
  BAlgebra b;
  b.table = table_from_json(j);
  b.type = b.table.type;
  b.vars = b.table.vars;
  b.weight_zero_dim = j.at("weight_zero_dim").get<long long>();
  b.total_dim = j.at("total_dim").get<long long>();
  return b;
}

nlohmann::ordered_json weight_table_to_json(const RootSystem& rs,
                                            const WeightTable& t) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = t.type.str();
  j["highest"] = t.highest;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [mu, m] : t.dominant) {
    nlohmann::ordered_json e;
    e["weight"] = mu;
    e["mult"] = m;
    e["orbit"] = orbit_size(rs, mu).get_str();
    arr.push_back(std::move(e));
  }
  j["dominant_weights"] = std::move(arr);
  j["zero_mult"] = t.mult_dominant(Weight(rs.rank(), 0));
  j["dim"] = table_total_dim(rs, t).get_str();
  return j;
}

std::string ring_element_str(const RingElement& e, char basis_letter) {
  std::string out;
  auto add = [&](const std::string& coeff, const std::string& label) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff + ")";
    if (!label.empty()) out += "*" + label;
  };
  for (size_t i = 0; i < e.c.size(); ++i)
    if (!e.c[i].is_zero())
      add(e.c[i].str(), std::string(1, basis_letter) + std::to_string(i + 1));
  if (!e.c0.is_zero()) add(e.c0.str(), "");
  return out.empty() ? "0" : out;
}

}  // namespace minorbit
