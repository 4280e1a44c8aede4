#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/reports.hpp"

namespace {

std::vector<toric::Int> parse_int_list(const std::string& csv) {
    std::vector<toric::Int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.emplace_back(item);
    }
    if (out.empty()) {
        throw toric::precondition_error("BadWeights", "expected a comma-separated integer list");
    }
    return out;
}

void emit(const std::string& format, const toric::ordered_json& j, const std::string& text) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toric workbench for one-parameter subgroup flips"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* cob = app.add_subcommand(
        "cobordism", "build the affine model fans, quotients, and the flip classification");
    std::string cob_qneg, cob_qpos;
    int cob_zeros = 0;
    bool cob_unchecked = false, cob_canonical = false;
    cob->add_option("--q-neg", cob_qneg, "negative-block weights, e.g. 2,1")->required();
    cob->add_option("--zeros", cob_zeros, "number of zero-weight coordinates")->default_val(0);
    cob->add_option("--q-pos", cob_qpos, "positive-block weights, e.g. 1")->required();
    cob->add_flag("--unchecked", cob_unchecked,
                  "accept block sizes outside 1 < d1 <= d2 < n+1 (exploration only)");
    cob->add_flag("--canonical-quotient-basis", cob_canonical,
                  "post-compose the quotient projection with its Hermite form");
    cob->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* bor = app.add_subcommand("bordism", "build and validate the glued one-parameter fan");
    std::string bor_qneg, bor_qpos;
    int bor_zeros = 0;
    bool bor_unchecked = false, bor_canonical = false;
    bor->add_option("--q-neg", bor_qneg)->required();
    bor->add_option("--zeros", bor_zeros)->default_val(0);
    bor->add_option("--q-pos", bor_qpos)->required();
    bor->add_flag("--unchecked", bor_unchecked);
    bor->add_flag("--canonical-quotient-basis", bor_canonical);
    bor->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* blow = app.add_subcommand("blowup", "weighted star subdivision of the orthant");
    int blow_d = 0;
    std::string blow_omega;
    bool blow_legacy = false;
    blow->add_option("--d", blow_d, "number of fixed (zero-weight) coordinates")->required();
    blow->add_option("--omega", blow_omega, "positive weights, non-decreasing, e.g. 1,2")->required();
    blow->add_flag("--legacy", blow_legacy, "allow d < 2 (classical origin blow-up)");
    blow->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ana = app.add_subcommand("analyze", "fixed-locus report for an action description file");
    std::string ana_file;
    bool ana_picard = false;
    ana->add_option("file", ana_file, "JSON action description ('-' for stdin)")->required();
    ana->add_flag("--picard-rank-one", ana_picard,
                  "record the Picard-rank-one assumption for the verdict");
    ana->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* exq = app.add_subcommand("example-quadric", "diagonal action on the odd quadric");
    int exq_n = 0, exq_k = 0;
    exq->add_option("--n", exq_n)->required();
    exq->add_option("--k", exq_k)->required();
    exq->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* exo = app.add_subcommand("example-og", "induced action on the quadric's line Grassmannian");
    int exo_n = 0;
    exo->add_option("--n", exo_n)->required();
    exo->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cob->parsed() || bor->parsed()) {
            const bool is_bordism = bor->parsed();
            const std::string qn = is_bordism ? bor_qneg : cob_qneg;
            const std::string qp = is_bordism ? bor_qpos : cob_qpos;
            const int zeros = is_bordism ? bor_zeros : cob_zeros;
            const bool unchecked = is_bordism ? bor_unchecked : cob_unchecked;
            const bool canonical = is_bordism ? bor_canonical : cob_canonical;
            auto setup = unchecked
                             ? toric::make_setup_unchecked(parse_int_list(qn), zeros, parse_int_list(qp))
                             : toric::make_setup(parse_int_list(qn), zeros, parse_int_list(qp));
            auto art = toric::run_cobordism_pipeline(setup, canonical);
            if (is_bordism) {
                emit(format, toric::bordism_report_json(art), toric::bordism_report_text(art));
            } else {
                emit(format, toric::cobordism_report_json(art), toric::cobordism_report_text(art));
            }
        } else if (blow->parsed()) {
            auto spec = toric::make_blowup_spec(blow_d, parse_int_list(blow_omega), blow_legacy);
            auto art = toric::run_blowup_pipeline(spec);
            emit(format, toric::blowup_report_json(art), toric::blowup_report_text(art));
        } else if (ana->parsed()) {
            toric::ordered_json doc;
            if (ana_file == "-") {
                doc = toric::ordered_json::parse(std::cin);
            } else {
                std::ifstream in(ana_file);
                if (!in) {
                    throw toric::precondition_error("BadActionDocument",
                                                    "cannot open '" + ana_file + "'");
                }
                doc = toric::ordered_json::parse(in);
            }
            auto desc = toric::action_description_from_json(doc);
            toric::FixedComponentReport rep;
            if (desc.variety == "pn") {
                rep = toric::analyze_pn(desc.action);
            } else if (desc.variety == "quadric") {
                rep = toric::analyze_quadric(desc.action, *desc.quadric);
            } else {
                rep = toric::analyze_og(desc.action, *desc.quadric);
            }
            auto art = toric::run_analysis_pipeline(rep, ana_picard);
            emit(format, toric::analysis_report_json(art), toric::analysis_report_text(art));
        } else if (exq->parsed()) {
            auto rep = toric::quadric_example_report(exq_n, exq_k);
            auto art = toric::run_analysis_pipeline(rep, /*picard_rank_one=*/true);
            emit(format, toric::analysis_report_json(art), toric::analysis_report_text(art));
        } else if (exo->parsed()) {
            auto rep = toric::og_example_report(exo_n);
            auto art = toric::run_analysis_pipeline(rep, /*picard_rank_one=*/true);
            emit(format, toric::analysis_report_json(art), toric::analysis_report_text(art));
        }
    } catch (const toric::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const toric::internal_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
