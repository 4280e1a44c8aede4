#include "toric/json_io.hpp"

#include "toric/errors.hpp"

namespace toric {

ordered_json int_to_json(const Int& v) {
    if (v.fits_int64()) return ordered_json(v.to_int64());
    return ordered_json(v.to_string());
}

Int int_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw precondition_error("BadInteger", "expected an integer or a decimal string");
}

ordered_json rat_to_json(const Rat& v) {
    if (v.is_integer()) return int_to_json(v.num());
    return ordered_json(v.to_string());
}

ordered_json vector_to_json(const LatticeVector& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : v) arr.push_back(int_to_json(x));
    return arr;
}

LatticeVector vector_from_json(const ordered_json& j) {
    if (!j.is_array()) throw precondition_error("BadVector", "expected an array of integers");
    LatticeVector v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

ordered_json matrix_to_json(const IntegerMatrix& m) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : m.rows) arr.push_back(vector_to_json(row));
    return arr;
}

ordered_json cone_to_json(const Cone& c) {
    ordered_json out;
    ordered_json gens = ordered_json::array();
    for (const auto& g : c.generators()) gens.push_back(vector_to_json(g));
    out["generators"] = std::move(gens);
    return out;
}

ordered_json fan_to_json(const Fan& f) {
    ordered_json out;
    out["ambient_rank"] = f.ambient_rank();
    ordered_json cones = ordered_json::array();
    for (const auto& c : f.cones()) cones.push_back(cone_to_json(c));
    out["cones"] = std::move(cones);
    return out;
}

Fan fan_from_json(const ordered_json& j) {
    if (!j.contains("ambient_rank") || !j.contains("cones")) {
        throw precondition_error("BadFanDocument", "need ambient_rank and cones fields");
    }
    int rank = j.at("ambient_rank").get<int>();
    std::vector<Cone> cones;
    for (const auto& cj : j.at("cones")) {
        std::vector<LatticeVector> gens;
        for (const auto& gj : cj.at("generators")) gens.push_back(vector_from_json(gj));
        cones.push_back(Cone::from_generators(std::move(gens), rank));
    }
    return Fan::from_cones(rank, std::move(cones));
}

ActionDescription action_description_from_json(const ordered_json& j) {
    ActionDescription out;
    if (!j.contains("weights") || !j.at("weights").is_array()) {
        throw precondition_error("BadActionDocument", "need a weights array");
    }
    for (const auto& w : j.at("weights")) out.action.weights.push_back(int_from_json(w));
    if (j.contains("offset")) out.action.linearization_offset = int_from_json(j.at("offset"));
    out.variety = j.value("variety", std::string("pn"));
    if (out.variety != "pn" && out.variety != "quadric" && out.variety != "og2") {
        throw precondition_error("BadActionDocument",
                                 "variety must be one of pn, quadric, og2");
    }
    if (j.contains("quadric")) {
        PairingQuadric q;
        const auto& qj = j.at("quadric");
        if (qj.contains("pairs")) {
            for (const auto& p : qj.at("pairs")) {
                if (!p.is_array() || p.size() != 2) {
                    throw precondition_error("BadActionDocument", "pairs must be [i, j] arrays");
                }
                q.pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
            }
        }
        if (qj.contains("squares")) {
            for (const auto& s : qj.at("squares")) q.squares.push_back(s.get<int>());
        }
        out.quadric = std::move(q);
    }
    if ((out.variety == "quadric" || out.variety == "og2") && !out.quadric) {
        throw precondition_error("BadActionDocument",
                                 "variety '" + out.variety + "' needs a quadric field");
    }
    return out;
}

} // namespace toric
