#include "toric/reports.hpp"

#include <sstream>

namespace toric {

namespace {

ordered_json int_list(const std::vector<Int>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : v) arr.push_back(int_to_json(x));
    return arr;
}

ordered_json maximal_cones_json(const Fan& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : f.maximal_cones()) {
        ordered_json gens = ordered_json::array();
        for (const auto& g : c.generators()) gens.push_back(vector_to_json(g));
        arr.push_back(std::move(gens));
    }
    return arr;
}

ordered_json setup_json(const CobordismSetup& s) {
    ordered_json out;
    out["n_plus_1"] = s.n_plus_1;
    out["d1"] = s.d1;
    out["d2"] = s.d2;
    out["q_neg"] = int_list(s.q_neg);
    out["q_pos"] = int_list(s.q_pos);
    out["v"] = vector_to_json(s.v);
    out["normalized_by_gcd"] = s.normalized_by_gcd;
    out["within_hypotheses"] = s.within_hypotheses;
    return out;
}

ordered_json quotient_side_json(const Fan& fan, const std::vector<QuotientConeRecord>& recs,
                                const SubdivisionReport& sub) {
    ordered_json out;
    out["fan"] = fan_to_json(fan);
    ordered_json cones = ordered_json::array();
    bool smooth = true;
    for (const auto& r : recs) {
        ordered_json cj;
        cj["omitted_coordinate"] = r.omitted_coordinate;
        ordered_json gens = ordered_json::array();
        for (const auto& g : r.cone.generators()) gens.push_back(vector_to_json(g));
        cj["generators"] = std::move(gens);
        cj["image_index"] = int_to_json(r.image_index);
        cj["cone_index"] = int_to_json(r.cone_index);
        cones.push_back(std::move(cj));
        if (r.image_index != Int(1)) smooth = false;
    }
    out["maximal_cones"] = std::move(cones);
    out["smooth"] = smooth;
    out["subdivision_verified"] = sub.ok();
    return out;
}

ordered_json classification_json(const FlipClassification& cls) {
    ordered_json out;
    out["kind"] = cls.kind == FlipClassification::Kind::Atiyah ? "Atiyah" : "NonEqualized";
    out["nonzero_weights"] = int_list(cls.nonzero_weights);
    out["smooth_sink"] = cls.smooth_minus;
    out["smooth_source"] = cls.smooth_plus;
    out["within_hypotheses"] = cls.within_hypotheses;
    return out;
}

ordered_json bordism_json(const BordismFan& b) {
    ordered_json out;
    out["lambda_plus_maximal"] = maximal_cones_json(b.lambda_plus);
    out["lambda_minus_maximal"] = maximal_cones_json(b.lambda_minus);
    out["sigma_tilde"] = fan_to_json(b.sigma_tilde);
    out["sigma_tilde_valid"] = b.validation.valid();
    out["lambda_plus_valid"] = b.validation_plus.valid();
    out["lambda_minus_valid"] = b.validation_minus.valid();
    out["inner_dim"] = b.inner_dim;
    return out;
}

std::string cones_text(const Fan& f) {
    std::ostringstream os;
    const auto& mc = f.maximal_cones();
    for (std::size_t i = 0; i < mc.size(); ++i) {
        if (i) os << ", ";
        os << mc[i].to_string();
    }
    return os.str();
}

} // namespace

CobordismArtifacts run_cobordism_pipeline(const CobordismSetup& setup, bool canonical_basis) {
    CobordismArtifacts art;
    art.setup = setup;
    art.fans = quotient_fans(setup, canonical_basis);
    art.classification = classify_flip(setup);
    art.bordism = bordism_fan(setup);
    return art;
}

ordered_json cobordism_report_json(const CobordismArtifacts& art) {
    ordered_json out;
    out["setup"] = setup_json(art.setup);
    out["delta_plus_maximal"] = maximal_cones_json(art.fans.delta_plus);
    out["delta_minus_maximal"] = maximal_cones_json(art.fans.delta_minus);
    out["projection"] = matrix_to_json(art.fans.projection);
    out["delta_bar"] = cone_to_json(art.fans.delta_bar);
    // the sink variety lives on the projected plus-side fan
    out["sink"] = quotient_side_json(art.fans.quot_plus, art.fans.sink_cones,
                                     art.fans.subdivision_sink);
    out["source"] = quotient_side_json(art.fans.quot_minus, art.fans.source_cones,
                                       art.fans.subdivision_source);
    out["classification"] = classification_json(art.classification);
    out["bordism"] = bordism_json(art.bordism);
    return out;
}

std::string cobordism_report_text(const CobordismArtifacts& art) {
    std::ostringstream os;
    const auto& s = art.setup;
    os << "setup: n+1=" << s.n_plus_1 << " d1=" << s.d1 << " d2=" << s.d2
       << " v=" << to_string(s.v);
    if (s.normalized_by_gcd) os << " (weights divided by their gcd)";
    if (!s.within_hypotheses) os << " [outside construction hypotheses]";
    os << "\n";
    os << "delta_plus maximal cones: " << cones_text(art.fans.delta_plus) << "\n";
    os << "delta_minus maximal cones: " << cones_text(art.fans.delta_minus) << "\n";
    os << "quotient (sink side): " << cones_text(art.fans.quot_plus) << "\n";
    os << "quotient (source side): " << cones_text(art.fans.quot_minus) << "\n";
    auto indices_line = [&](const std::vector<QuotientConeRecord>& recs) {
        std::ostringstream line;
        for (std::size_t i = 0; i < recs.size(); ++i) {
            if (i) line << ", ";
            line << recs[i].image_index;
            if (recs[i].cone_index != recs[i].image_index) {
                line << " (cone " << recs[i].cone_index << ")";
            }
        }
        return line.str();
    };
    os << "sink cone indices: " << indices_line(art.fans.sink_cones) << "\n";
    os << "source cone indices: " << indices_line(art.fans.source_cones) << "\n";
    os << "subdivision certificates: sink="
       << (art.fans.subdivision_sink.ok() ? "ok" : "FAILED")
       << " source=" << (art.fans.subdivision_source.ok() ? "ok" : "FAILED") << "\n";
    os << "flip classification: "
       << (art.classification.kind == FlipClassification::Kind::Atiyah ? "Atiyah"
                                                                       : "NonEqualized");
    if (!art.classification.within_hypotheses) os << " [outside construction hypotheses]";
    os << "\n";
    os << "lambda_plus maximal cones: " << cones_text(art.bordism.lambda_plus) << "\n";
    os << "lambda_minus maximal cones: " << cones_text(art.bordism.lambda_minus) << "\n";
    os << "glued fan: " << art.bordism.sigma_tilde.maximal_cones().size()
       << " maximal cones, validation "
       << (art.bordism.validation.valid() ? "ok" : "FAILED") << "\n";
    os << "inner fixed-locus dimension: " << art.bordism.inner_dim << "\n";
    return os.str();
}

ordered_json bordism_report_json(const CobordismArtifacts& art) {
    ordered_json out;
    out["setup"] = setup_json(art.setup);
    out["bordism"] = bordism_json(art.bordism);
    out["sink_fan"] = fan_to_json(art.bordism.sink_fan);
    out["source_fan"] = fan_to_json(art.bordism.source_fan);
    return out;
}

std::string bordism_report_text(const CobordismArtifacts& art) {
    std::ostringstream os;
    os << "setup: v=" << to_string(art.setup.v) << "\n";
    os << "lambda_plus maximal cones: " << cones_text(art.bordism.lambda_plus) << "\n";
    os << "lambda_minus maximal cones: " << cones_text(art.bordism.lambda_minus) << "\n";
    os << "glued fan maximal cones: " << cones_text(art.bordism.sigma_tilde) << "\n";
    os << "validation: " << (art.bordism.validation.valid() ? "ok" : "FAILED") << "\n";
    os << "inner fixed-locus dimension: " << art.bordism.inner_dim << "\n";
    os << "sink fan: " << cones_text(art.bordism.sink_fan) << "\n";
    os << "source fan: " << cones_text(art.bordism.source_fan) << "\n";
    return os.str();
}

BlowupArtifacts run_blowup_pipeline(const WeightedBlowupSpec& spec) {
    BlowupArtifacts art;
    art.spec = spec;
    art.subdivision = weighted_star_subdivision(spec);
    art.fiber = exceptional_fiber(spec);
    for (const auto& c : art.subdivision.fan.maximal_cones()) {
        art.chart_indices.push_back(c.index());
    }
    return art;
}

ordered_json blowup_report_json(const BlowupArtifacts& art) {
    ordered_json out;
    ordered_json spec;
    spec["ambient_rank"] = art.spec.ambient_rank;
    spec["fixed_block"] = art.spec.fixed_block;
    spec["omega"] = vector_to_json(art.spec.omega);
    spec["legacy"] = art.spec.legacy;
    out["spec"] = std::move(spec);
    out["fan"] = fan_to_json(art.subdivision.fan);
    out["maximal_cones"] = maximal_cones_json(art.subdivision.fan);
    out["chart_indices"] = int_list(art.chart_indices);
    ordered_json fiber;
    fiber["weights"] = int_list(art.fiber.weights);
    fiber["gcd"] = int_to_json(art.fiber.weight_gcd);
    fiber["straight_projective_space"] = art.fiber.is_straight_projective_space;
    out["exceptional_fiber"] = std::move(fiber);
    out["validation_ok"] = art.subdivision.validation.valid();
    out["refinement_ok"] = art.subdivision.refinement.ok();
    return out;
}

std::string blowup_report_text(const BlowupArtifacts& art) {
    std::ostringstream os;
    os << "blow-up of rank " << art.spec.ambient_rank << " orthant, fixed block "
       << art.spec.fixed_block << ", ray " << to_string(art.spec.omega);
    if (art.spec.legacy) os << " [legacy origin blow-up]";
    os << "\n";
    const auto& mc = art.subdivision.fan.maximal_cones();
    for (std::size_t i = 0; i < mc.size(); ++i) {
        os << "chart " << i << ": " << mc[i].to_string() << "  index "
           << art.chart_indices[i] << "\n";
    }
    os << "exceptional fiber: P(";
    for (std::size_t i = 0; i < art.fiber.weights.size(); ++i) {
        if (i) os << ",";
        os << art.fiber.weights[i];
    }
    os << ")" << (art.fiber.is_straight_projective_space ? " [straight projective space]" : "")
       << "\n";
    os << "refinement: " << (art.subdivision.refinement.ok() ? "ok" : "FAILED") << "\n";
    return os.str();
}

AnalysisArtifacts run_analysis_pipeline(const FixedComponentReport& report,
                                        bool picard_rank_one) {
    AnalysisArtifacts art;
    art.report = report;
    art.graph = order_graph(report);
    art.verdict = classify_psi(report, picard_rank_one);
    return art;
}

ordered_json analysis_report_json(const AnalysisArtifacts& art) {
    const auto& rep = art.report;
    ordered_json out;
    out["variety"] = rep.variety;
    out["weights"] = int_list(rep.action.weights);
    out["offset"] = int_to_json(rep.action.linearization_offset);
    if (rep.quadric) {
        ordered_json qj;
        ordered_json pairs = ordered_json::array();
        for (const auto& [i, j] : rep.quadric->pairs) pairs.push_back(ordered_json::array({i, j}));
        qj["pairs"] = std::move(pairs);
        qj["squares"] = rep.quadric->squares;
        out["quadric"] = std::move(qj);
    }
    ordered_json comps = ordered_json::array();
    for (const auto& c : rep.components) {
        ordered_json cj;
        cj["label"] = c.label;
        cj["mu"] = int_to_json(c.mu);
        cj["dimension"] = c.dimension;
        cj["kind"] = component_kind_name(c.kind);
        cj["normal_weights_pos"] = int_list(c.normal_weights_pos);
        cj["normal_weights_neg"] = int_list(c.normal_weights_neg);
        cj["nu_plus"] = static_cast<int>(c.normal_weights_pos.size());
        cj["nu_minus"] = static_cast<int>(c.normal_weights_neg.size());
        cj["equalized"] = c.equalized;
        ordered_json reps = ordered_json::array();
        for (const auto& r : c.representatives) reps.push_back(r);
        cj["representatives"] = std::move(reps);
        comps.push_back(std::move(cj));
    }
    out["components"] = std::move(comps);
    out["criticality"] = rep.criticality;
    out["bandwidth"] = int_to_json(rep.bandwidth);
    out["source"] = rep.components[static_cast<std::size_t>(rep.source_index)].label;
    out["sink"] = rep.components[static_cast<std::size_t>(rep.sink_index)].label;
    ordered_json graph;
    ordered_json edges = ordered_json::array();
    for (const auto& e : art.graph.edges) {
        ordered_json ej;
        ej["from"] = rep.components[static_cast<std::size_t>(e.from)].label;
        ej["to"] = rep.components[static_cast<std::size_t>(e.to)].label;
        ej["mu_drop"] = int_to_json(e.mu_drop);
        ej["tangent_weight"] = int_to_json(e.tangent_weight_at_lower_end);
        edges.push_back(std::move(ej));
    }
    graph["edges"] = std::move(edges);
    graph["inner_only_extremal"] = art.graph.inner_only_extremal;
    out["order_graph"] = std::move(graph);
    ordered_json verdict;
    switch (art.verdict.verdict) {
        case PsiVerdict::Verdict::AtiyahLocal: verdict["verdict"] = "AtiyahLocal"; break;
        case PsiVerdict::Verdict::NonEqualizedLocal: verdict["verdict"] = "NonEqualizedLocal"; break;
        case PsiVerdict::Verdict::NotApplicable: verdict["verdict"] = "NotApplicable"; break;
    }
    verdict["reason"] = art.verdict.reason;
    verdict["note"] = art.verdict.note;
    ordered_json hyp;
    hyp["criticality_two"] = art.verdict.criticality_two;
    hyp["bordism_after_blowup"] = art.verdict.bordism_after_blowup;
    hyp["picard_rank_one_assumed"] = art.verdict.picard_rank_one_assumed;
    hyp["order_condition"] = art.verdict.order_condition;
    verdict["hypotheses"] = std::move(hyp);
    out["verdict"] = std::move(verdict);
    return out;
}

std::string analysis_report_text(const AnalysisArtifacts& art) {
    const auto& rep = art.report;
    std::ostringstream os;
    os << "variety: " << rep.variety << "\n";
    os << "criticality " << rep.criticality << ", bandwidth " << rep.bandwidth << "\n";
    for (const auto& c : rep.components) {
        os << "  " << c.label;
        if (c.kind == ComponentKind::Empty) {
            os << "  (empty level)\n";
            continue;
        }
        os << "  nu+=" << c.normal_weights_pos.size() << " nu-=" << c.normal_weights_neg.size()
           << (c.equalized ? "  equalized" : "  non-equalized") << "  normal weights [";
        for (std::size_t i = 0; i < c.normal_weights_neg.size(); ++i) {
            if (i) os << ",";
            os << c.normal_weights_neg[i];
        }
        os << " | ";
        for (std::size_t i = 0; i < c.normal_weights_pos.size(); ++i) {
            if (i) os << ",";
            os << c.normal_weights_pos[i];
        }
        os << "]\n";
    }
    os << "source: " << rep.components[static_cast<std::size_t>(rep.source_index)].label << "\n";
    os << "sink: " << rep.components[static_cast<std::size_t>(rep.sink_index)].label << "\n";
    os << "order graph: " << art.graph.edges.size() << " edges, inner components link "
       << (art.graph.inner_only_extremal ? "only to extremal ones" : "beyond extremal ones")
       << "\n";
    os << "verdict: ";
    switch (art.verdict.verdict) {
        case PsiVerdict::Verdict::AtiyahLocal: os << "AtiyahLocal"; break;
        case PsiVerdict::Verdict::NonEqualizedLocal: os << "NonEqualizedLocal"; break;
        case PsiVerdict::Verdict::NotApplicable:
            os << "NotApplicable (" << art.verdict.reason << ")";
            break;
    }
    os << "\n";
    if (!art.verdict.note.empty()) os << "note: " << art.verdict.note << "\n";
    os << "hypotheses: criticality_two=" << (art.verdict.criticality_two ? "yes" : "no")
       << " bordism_after_blowup=" << (art.verdict.bordism_after_blowup ? "yes" : "no")
       << " picard_rank_one_assumed=" << (art.verdict.picard_rank_one_assumed ? "yes" : "no")
       << " order_condition=" << (art.verdict.order_condition ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace toric
