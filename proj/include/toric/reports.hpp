#pragma once

#include <string>

#include "toric/blowup.hpp"
#include "toric/cobordism.hpp"
#include "toric/json_io.hpp"

namespace toric {

// Assembled pipeline results behind the CLI subcommands. Reports carry the
// sink/source labelling; raw fan names appear only next to it.
struct CobordismArtifacts {
    CobordismSetup setup;
    CobordismFans fans;
    FlipClassification classification;
    BordismFan bordism;
};
CobordismArtifacts run_cobordism_pipeline(const CobordismSetup& setup,
                                          bool canonical_basis = false);
ordered_json cobordism_report_json(const CobordismArtifacts& art);
std::string cobordism_report_text(const CobordismArtifacts& art);
ordered_json bordism_report_json(const CobordismArtifacts& art);
std::string bordism_report_text(const CobordismArtifacts& art);

struct BlowupArtifacts {
    WeightedBlowupSpec spec;
    StarSubdivision subdivision;
    WPSSignature fiber;
    std::vector<Int> chart_indices; // one per maximal cone, same order
};
BlowupArtifacts run_blowup_pipeline(const WeightedBlowupSpec& spec);
ordered_json blowup_report_json(const BlowupArtifacts& art);
std::string blowup_report_text(const BlowupArtifacts& art);

struct AnalysisArtifacts {
    FixedComponentReport report;
    OrderGraph graph;
    PsiVerdict verdict;
};
AnalysisArtifacts run_analysis_pipeline(const FixedComponentReport& report,
                                        bool picard_rank_one);
ordered_json analysis_report_json(const AnalysisArtifacts& art);
std::string analysis_report_text(const AnalysisArtifacts& art);

} // namespace toric
