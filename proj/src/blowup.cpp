#include "toric/blowup.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

WeightedBlowupSpec make_blowup_spec(int fixed_block, std::vector<Int> positive_weights,
                                    bool legacy) {
    const int d = fixed_block;
    const int n = d + static_cast<int>(positive_weights.size());
    if (positive_weights.empty()) {
        throw precondition_error("BadWeights", "need at least one positive weight");
    }
    for (const auto& q : positive_weights) {
        if (q.sign() <= 0) throw precondition_error("BadWeights", "weights must be positive");
    }
    if (!std::is_sorted(positive_weights.begin(), positive_weights.end(),
                        [](const Int& a, const Int& b) { return a < b; })) {
        throw precondition_error("BadWeights", "weights must be non-decreasing");
    }
    if (d < 0 || d >= n) throw precondition_error("BadBlockSizes", "need 0 <= d < n");
    if (!legacy && d < 2) {
        throw precondition_error("BadBlockSizes",
                                 "need 2 <= d < n (pass legacy for the origin blow-up cases)");
    }
    WeightedBlowupSpec spec;
    spec.ambient_rank = n;
    spec.fixed_block = d;
    spec.legacy = d < 2;
    spec.omega.assign(static_cast<std::size_t>(n), Int(0));
    for (int i = d; i < n; ++i) spec.omega[static_cast<std::size_t>(i)] = positive_weights[static_cast<std::size_t>(i - d)];
    return spec;
}

StarSubdivision weighted_star_subdivision(const WeightedBlowupSpec& spec) {
    const int n = spec.ambient_rank;
    const int d = spec.fixed_block;
    std::vector<Cone> max_cones;
    for (int omit = d; omit < n; ++omit) {
        std::vector<LatticeVector> gens;
        for (int j = 0; j < n; ++j) {
            if (j == omit) continue;
            gens.push_back(unit_vector(n, j));
        }
        gens.push_back(spec.omega);
        max_cones.push_back(Cone::from_generators(std::move(gens), n));
    }

    StarSubdivision out;
    out.fan = Fan::from_maximal_cones(n, max_cones);
    out.validation = validate_fan(out.fan);

    std::vector<LatticeVector> orthant_gens;
    for (int j = 0; j < n; ++j) orthant_gens.push_back(unit_vector(n, j));
    Cone orthant = Cone::from_generators(std::move(orthant_gens), n);
    out.refinement = verify_subdivision(out.fan.maximal_cones(), orthant);
    if (!out.validation.valid() || !out.refinement.ok()) {
        throw internal_error("FanValidationFailed",
                             "star subdivision failed validation or the refinement check");
    }
    return out;
}

WPSSignature exceptional_fiber(const WeightedBlowupSpec& spec) {
    WPSSignature sig;
    for (int i = spec.fixed_block; i < spec.ambient_rank; ++i) {
        sig.weights.push_back(spec.omega[static_cast<std::size_t>(i)]);
    }
    sig.weight_gcd = 0;
    for (const auto& q : sig.weights) sig.weight_gcd = gcd(sig.weight_gcd, q);
    sig.is_straight_projective_space =
        std::all_of(sig.weights.begin(), sig.weights.end(),
                    [](const Int& q) { return q == Int(1); });
    return sig;
}

ChartWeights chart_weights(const Fan& f, const LatticeVector& v, const Cone& c) {
    bool found = false;
    for (const auto& m : f.maximal_cones()) {
        if (m == c) {
            found = true;
            break;
        }
    }
    if (!found) {
        throw precondition_error("NotMaximal", "cone is not a maximal cone of the fan");
    }
    if (!c.is_simplicial()) {
        throw precondition_error("NotSimplicial", "chart weights require a simplicial cone");
    }
    auto coeff = c.coefficients(v);
    if (!coeff) {
        throw precondition_error("ShapeMismatch",
                                 "subgroup vector lies outside the span of the chart cone");
    }
    ChartWeights out;
    out.weights = std::move(*coeff);
    out.non_reduced_chart = c.index() != Int(1);
    return out;
}

} // namespace toric
