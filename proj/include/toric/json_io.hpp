#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "toric/actions.hpp"
#include "toric/fan.hpp"

namespace toric {

using ordered_json = nlohmann::ordered_json;

ordered_json int_to_json(const Int& v); // number when it fits in 64 bits, else decimal string
Int int_from_json(const ordered_json& j);
ordered_json rat_to_json(const Rat& v); // integer as above, otherwise "num/den" string

ordered_json vector_to_json(const LatticeVector& v);
LatticeVector vector_from_json(const ordered_json& j);

ordered_json matrix_to_json(const IntegerMatrix& m);

ordered_json cone_to_json(const Cone& c);
ordered_json fan_to_json(const Fan& f); // {"ambient_rank": r, "cones": [{"generators": ...}]}
Fan fan_from_json(const ordered_json& j);

// Action-description document: {"weights": [...], "offset": 0,
// "quadric": {"pairs": [[i,j],...], "squares": [i,...]}, "variety": "pn"|"quadric"|"og2"}
struct ActionDescription {
    DiagonalAction action;
    std::optional<PairingQuadric> quadric;
    std::string variety;
};
ActionDescription action_description_from_json(const ordered_json& j);

} // namespace toric
