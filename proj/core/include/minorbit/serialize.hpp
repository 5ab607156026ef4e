#pragma once

#include <nlohmann/json.hpp>

#include "minorbit/cohomology.hpp"
#include "minorbit/weights.hpp"

namespace minorbit {

struct BAlgebra;  // joseph.hpp

inline constexpr int kSchemaVersion = 1;

/// Polynomials serialize as the canonical string plus a structured term list
/// [{"e": [exponents...], "c": "rational"}].
nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const Vars& vars, const nlohmann::json& j);

nlohmann::ordered_json ring_element_to_json(const RingElement& e);

nlohmann::ordered_json table_to_json(const MultiplicationTable& t);
MultiplicationTable table_from_json(const nlohmann::json& j);

nlohmann::ordered_json balgebra_to_json(const BAlgebra& b);
BAlgebra balgebra_from_json(const nlohmann::json& j);

nlohmann::ordered_json weight_table_to_json(const RootSystem& rs,
                                            const WeightTable& t);

std::string ring_element_str(const RingElement& e, char basis_letter);

}  // namespace minorbit
