// Acceptance suite: one line per criterion, nonzero exit when any fails.
// The shared configuration grid (criteria 2-4) runs across hardware threads.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "toric/actions.hpp"
#include "toric/blowup.hpp"
#include "toric/cobordism.hpp"
#include "toric/errors.hpp"
#include "toric/reports.hpp"

using namespace toric;

namespace {

struct Criterion {
    int id;
    bool pass;
    std::string detail;
};

std::vector<Int> ints(const std::vector<long long>& xs) {
    std::vector<Int> v;
    v.reserve(xs.size());
    for (auto x : xs) v.push_back(Int(x));
    return v;
}

LatticeVector vec(std::vector<long long> xs) { return ints(std::move(xs)); }

// ---------------------------------------------------------------- criterion 1

Criterion criterion1() {
    Criterion c{1, true, ""};
    auto s = make_setup(ints({2, 1}), 0, ints({1}));
    BFans b = fans_B(s);
    auto gens_of = [](const Fan& f) {
        std::set<std::vector<LatticeVector>> out;
        for (const auto& mc : f.maximal_cones()) out.insert(mc.generators());
        return out;
    };
    std::set<std::vector<LatticeVector>> plus_expected{
        {vec({0, 1, 0}), vec({1, 0, 0})}};
    std::set<std::vector<LatticeVector>> minus_expected{
        {vec({0, 0, 1}), vec({0, 1, 0})}, {vec({0, 0, 1}), vec({1, 0, 0})}};
    if (gens_of(b.delta_plus) != plus_expected || gens_of(b.delta_minus) != minus_expected) {
        c.pass = false;
        c.detail = "surviving fans for weights (2,1|1) differ from the expected maximal cones";
        return c;
    }
    c.detail = "weights (2,1|1): plus side {<e1,e2>}, minus side {<e1,e3>,<e2,e3>} reproduced exactly";
    return c;
}

// ------------------------------------------------------- criteria 2-4 (grid)

struct SetupSpec {
    std::vector<long long> q_neg;
    int zeros;
    std::vector<long long> q_pos;
};

// Exhaustive grid over rank <= max_n1 with weights in [1, qmax]; tuples with
// gcd > 1 normalize to another grid member, so only coprime tuples enumerate.
std::vector<SetupSpec> enumerate_grid(int max_n1, long long qmax) {
    std::vector<SetupSpec> out;
    for (int n1 = 3; n1 <= max_n1; ++n1) {
        for (int d1 = 2; d1 <= n1 - 1; ++d1) {
            for (int p = 1; d1 + p <= n1; ++p) {
                const int zeros = n1 - d1 - p;
                const int k = d1 + p;
                std::vector<long long> q(static_cast<std::size_t>(k), 1);
                while (true) {
                    long long g = 0;
                    for (long long x : q) g = std::gcd(g, x);
                    if (g == 1) {
                        SetupSpec spec;
                        spec.q_neg.assign(q.begin(), q.begin() + d1);
                        spec.zeros = zeros;
                        spec.q_pos.assign(q.begin() + d1, q.end());
                        out.push_back(std::move(spec));
                    }
                    int pos = k - 1;
                    while (pos >= 0 && q[static_cast<std::size_t>(pos)] == qmax) --pos;
                    if (pos < 0) break;
                    ++q[static_cast<std::size_t>(pos)];
                    for (int i = pos + 1; i < k; ++i) q[static_cast<std::size_t>(i)] = 1;
                }
            }
        }
    }
    return out;
}

struct GridOutcome {
    long long setups = 0;
    std::vector<std::string> dichotomy;
    std::vector<std::string> multiplicity;
    std::vector<std::string> subdivision;
    std::vector<std::string> variety_law;

    void note(std::vector<std::string>& bucket, const std::string& msg) {
        if (bucket.size() < 5) bucket.push_back(msg);
    }
};

void check_setup(const SetupSpec& spec, GridOutcome& out) {
    std::ostringstream tag;
    tag << "(";
    for (auto x : spec.q_neg) tag << x << ",";
    tag << "0^" << spec.zeros << "|";
    for (auto x : spec.q_pos) tag << x << ",";
    tag << ")";

    CobordismSetup s = make_setup(ints(spec.q_neg), spec.zeros, ints(spec.q_pos));
    CobordismFans fans;
    try {
        fans = quotient_fans(s);
    } catch (const internal_error& e) {
        out.note(out.subdivision, tag.str() + ": " + e.what());
        return;
    }

    // criterion 2: the weight test, the classification, and the smoothness of
    // the projected maximal cones must tell one story
    bool all_one = true;
    for (const auto& q : s.q_neg) {
        if (q != Int(1)) all_one = false;
    }
    for (const auto& q : s.q_pos) {
        if (q != Int(1)) all_one = false;
    }
    try {
        FlipClassification cls = classify_flip(s, fans);
        bool atiyah = cls.kind == FlipClassification::Kind::Atiyah;
        bool smooth = cls.smooth_minus && cls.smooth_plus;
        if (atiyah != all_one || smooth != all_one) {
            out.note(out.dichotomy, tag.str() + ": classification does not match the weights");
        }
    } catch (const internal_error& e) {
        out.note(out.dichotomy, tag.str() + ": " + e.what());
    }

    // criterion 3: projected facet indices equal the omitted weights; the
    // subgroup index (SNF route, stored in the record) must agree with the
    // determinant oracle computed afresh here
    bool loo_gcd_one = true; // leave-one-out gcds of v govern the variety law
    for (std::size_t i = 0; i < s.v.size(); ++i) {
        Int g = 0;
        for (std::size_t j = 0; j < s.v.size(); ++j) {
            if (j != i) g = gcd(g, s.v[j]);
        }
        if (g != Int(1)) loo_gcd_one = false;
    }
    auto check_records = [&](const std::vector<QuotientConeRecord>& recs,
                             const std::vector<Int>& weights, int offset) {
        for (std::size_t i = 0; i < recs.size(); ++i) {
            const auto& rec = recs[i];
            const Int& q = weights[i];
            std::vector<LatticeVector> raw;
            for (int j = 1; j <= s.n_plus_1; ++j) {
                if (j == rec.omitted_coordinate) continue;
                raw.push_back(fans.projection.apply(unit_vector(s.n_plus_1, j - 1)));
            }
            Int oracle = determinant(IntegerMatrix(raw)).abs();
            if (oracle != q || rec.image_index != q) {
                out.note(out.multiplicity,
                         tag.str() + ": omitted " + std::to_string(rec.omitted_coordinate) +
                             " gives index " + rec.image_index.to_string() + "/det " +
                             oracle.to_string() + ", weight " + q.to_string());
            }
            if (loo_gcd_one && rec.cone_index != q) {
                out.note(out.variety_law,
                         tag.str() + ": normalized cone index " + rec.cone_index.to_string() +
                             " misses weight " + q.to_string());
            }
        }
        (void)offset;
    };
    check_records(fans.source_cones, s.q_neg, 0);
    check_records(fans.sink_cones, s.q_pos, s.d2);

    // criterion 4: subdivision certificates, glued-fan validation, inner dim
    if (!fans.subdivision_sink.ok() || !fans.subdivision_source.ok()) {
        out.note(out.subdivision, tag.str() + ": subdivision certificate failed");
    }
    try {
        BordismFan b = bordism_fan(s, fans);
        if (!b.validation.valid() || !b.validation_plus.valid() || !b.validation_minus.valid()) {
            out.note(out.subdivision, tag.str() + ": glued fan validation failed");
        }
        if (b.inner_dim != s.d2 - s.d1) {
            out.note(out.subdivision, tag.str() + ": inner dimension mismatch");
        }
    } catch (const internal_error& e) {
        out.note(out.subdivision, tag.str() + ": " + e.what());
    }
    ++out.setups;
}

std::array<Criterion, 3> criteria_2_3_4() {
    auto grid = enumerate_grid(7, 4);
    unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<GridOutcome> results(n_threads);
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < n_threads; ++t) {
        workers.emplace_back([&, t] {
            while (true) {
                std::size_t i = next.fetch_add(64);
                if (i >= grid.size()) break;
                std::size_t hi = std::min(grid.size(), i + 64);
                for (std::size_t j = i; j < hi; ++j) check_setup(grid[j], results[t]);
            }
        });
    }
    for (auto& w : workers) w.join();

    GridOutcome total;
    for (auto& r : results) {
        total.setups += r.setups;
        for (auto& m : r.dichotomy) total.note(total.dichotomy, m);
        for (auto& m : r.multiplicity) total.note(total.multiplicity, m);
        for (auto& m : r.subdivision) total.note(total.subdivision, m);
        for (auto& m : r.variety_law) total.note(total.variety_law, m);
    }

    auto detail = [&](const char* what, const std::vector<std::string>& bad,
                      const std::string& extra = "") {
        std::ostringstream os;
        if (bad.empty()) {
            os << what << " on " << total.setups << " configurations (rank<=7, weights<=4)"
               << extra;
        } else {
            os << bad.size() << "+ failures, e.g. " << bad.front();
        }
        return os.str();
    };

    Criterion c2{2, total.dichotomy.empty(),
                 detail("weight/smoothness dichotomy agrees", total.dichotomy)};
    Criterion c3{3, total.multiplicity.empty() && total.variety_law.empty(),
                 detail("facet index = omitted weight (determinant oracle)", total.multiplicity,
                        total.variety_law.empty()
                            ? "; normalized-cone law confirmed where generator images stay primitive"
                            : "")};
    if (!total.variety_law.empty()) {
        c3.detail = "variety-level law failures: " + total.variety_law.front();
    }
    Criterion c4{4, total.subdivision.empty(),
                 detail("subdivision certificates, glued-fan validation, inner dimension",
                        total.subdivision)};
    return {c2, c3, c4};
}

// ---------------------------------------------------------------- criterion 5

Criterion criterion5() {
    Criterion c{5, true, ""};
    long long count = 0;
    std::vector<std::string> issues;
    for (int n = 2; n <= 6; ++n) {
        for (int d = 0; d < n; ++d) {
            const int len = n - d;
            std::vector<long long> q(static_cast<std::size_t>(len), 1);
            while (true) {
                bool sorted = std::is_sorted(q.begin(), q.end());
                if (sorted) {
                    ++count;
                    long long g = 0;
                    for (long long x : q) g = std::gcd(g, x);
                    auto spec = make_blowup_spec(d, ints(q), /*legacy=*/true);
                    auto sub = weighted_star_subdivision(spec);
                    std::multiset<long long> indices, scaled;
                    for (const auto& mc : sub.fan.maximal_cones()) {
                        indices.insert(mc.index().to_int64());
                    }
                    for (long long x : q) scaled.insert(x / g);
                    if (indices != scaled) {
                        issues.push_back("chart indices differ from scaled weights");
                    }
                    if (g == 1) {
                        bool all_smooth = *indices.rbegin() == 1;
                        bool all_ones = std::all_of(q.begin(), q.end(),
                                                    [](long long x) { return x == 1; });
                        if (all_smooth != all_ones) {
                            issues.push_back("smooth-iff-unit-weights failed");
                        }
                    }
                    if (!sub.refinement.ok()) issues.push_back("refinement certificate failed");
                    auto fiber = exceptional_fiber(spec);
                    if (fiber.weights != ints(q)) issues.push_back("fiber signature mismatch");
                }
                int pos = len - 1;
                while (pos >= 0 && q[static_cast<std::size_t>(pos)] == 4) --pos;
                if (pos < 0) break;
                ++q[static_cast<std::size_t>(pos)];
                for (int i = pos + 1; i < len; ++i) q[static_cast<std::size_t>(i)] = 1;
            }
        }
    }
    c.pass = issues.empty();
    std::ostringstream os;
    if (c.pass) {
        os << "chart smoothness iff unit weights (gcd-one tuples), scaled law and fiber "
              "signature on all "
           << count << " ray choices (rank<=6, weights<=4)";
    } else {
        os << issues.size() << " failures, e.g. " << issues.front();
    }
    c.detail = os.str();
    return c;
}

// ---------------------------------------------------------------- criterion 6

Criterion criterion6() {
    Criterion c{6, true, ""};
    std::vector<std::string> issues;
    int cases = 0;
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            ++cases;
            std::string tag = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
            auto rep = quadric_example_report(n, k);
            auto verdict = classify_psi(rep, /*picard_rank_one=*/true);
            auto find_mu = [&](long long mu) -> const FixedComponent* {
                for (const auto& comp : rep.components) {
                    if (comp.mu == Int(mu)) return &comp;
                }
                return nullptr;
            };
            const FixedComponent* src = find_mu(1);
            const FixedComponent* inn = find_mu(0);
            const FixedComponent* snk = find_mu(-1);
            if (!src || !snk || !inn) {
                issues.push_back(tag + ": missing weight level");
                continue;
            }
            if (rep.bandwidth != Int(2)) issues.push_back(tag + ": bandwidth != 2");
            if (src->dimension != k - 1 || snk->dimension != k - 1) {
                issues.push_back(tag + ": extremal components are not projective (k-1)-spaces");
            }
            // extremal normal multiplicities: (2n-2k+1) ones and (k-1) twos
            std::multiset<long long> expect;
            for (int i = 0; i < 2 * n - 2 * k + 1; ++i) expect.insert(1);
            for (int i = 0; i < k - 1; ++i) expect.insert(2);
            std::multiset<long long> got;
            for (const auto& w : snk->normal_weights_pos) got.insert(w.to_int64());
            if (got != expect) issues.push_back(tag + ": extremal normal multiplicities differ");
            bool equalized_everywhere = true;
            for (const auto& comp : rep.components) {
                if (comp.kind != ComponentKind::Empty && !comp.equalized) {
                    equalized_everywhere = false;
                }
            }
            if (equalized_everywhere != (k == 1)) {
                issues.push_back(tag + ": equalized-iff-k=1 failed");
            }
            if (k < n) {
                if (rep.criticality != 2) issues.push_back(tag + ": criticality != 2");
                if (inn->kind != ComponentKind::QuadricInSubspace ||
                    inn->dimension != 2 * n - 2 * k - 1) {
                    issues.push_back(tag + ": inner component shape mismatch");
                }
                if (!inn->equalized) issues.push_back(tag + ": inner component not equalized");
                if (k >= 2 && verdict.verdict != PsiVerdict::Verdict::AtiyahLocal) {
                    issues.push_back(tag + ": expected the unit-weight local model verdict");
                }
            } else {
                // boundary case: the middle level dies on the form, so the
                // criticality drops to 1 and the decision procedure abstains
                if (inn->kind != ComponentKind::Empty) {
                    issues.push_back(tag + ": middle level should be empty at k=n");
                }
                if (rep.criticality != 1) issues.push_back(tag + ": criticality should drop to 1");
                if (verdict.verdict != PsiVerdict::Verdict::NotApplicable) {
                    issues.push_back(tag + ": verdict should be NotApplicable at k=n");
                }
            }
        }
    }
    c.pass = issues.empty();
    if (c.pass) {
        c.detail = "fixed-locus shape, multiplicities, equalized-iff-k=1, verdicts on " +
                   std::to_string(cases) +
                   " cases (n=2..6, k=1..n; k=n has the forced empty middle level, k<n has "
                   "criticality 2 and bandwidth 2)";
    } else {
        c.detail = std::to_string(issues.size()) + " failures, e.g. " + issues.front();
    }
    return c;
}

// ---------------------------------------------------------------- criterion 7

Criterion criterion7() {
    Criterion c{7, true, ""};
    std::vector<std::string> issues;
    for (int n = 3; n <= 6; ++n) {
        std::string tag = "(n=" + std::to_string(n) + ")";
        auto rep = og_example_report(n);
        if (rep.criticality != 2) issues.push_back(tag + ": criticality != 2");
        if (rep.bandwidth != Int(4)) issues.push_back(tag + ": bandwidth != 4");
        std::set<long long> mus;
        for (const auto& comp : rep.components) mus.insert(comp.mu.to_int64());
        if (mus != std::set<long long>{-2, 0, 2}) issues.push_back(tag + ": levels differ");
        const FixedComponent* inner = nullptr;
        for (const auto& comp : rep.components) {
            if (comp.mu == Int(0)) inner = &comp;
        }
        if (!inner) {
            issues.push_back(tag + ": no middle level");
            continue;
        }
        std::multiset<long long> pos{1}, neg{-1};
        for (int i = 0; i < n - 2; ++i) {
            pos.insert(2);
            neg.insert(-2);
        }
        std::multiset<long long> got_pos, got_neg;
        for (const auto& w : inner->normal_weights_pos) got_pos.insert(w.to_int64());
        for (const auto& w : inner->normal_weights_neg) got_neg.insert(w.to_int64());
        if (got_pos != pos || got_neg != neg) {
            issues.push_back(tag + ": inner normal weights differ");
        }
        for (const auto& comp : rep.components) {
            for (const auto& plane : comp.representatives) {
                auto t = og_tangent_weights(rep.action, *rep.quadric, {plane[0], plane[1]});
                if (t.size() != static_cast<std::size_t>(4 * n - 5)) {
                    issues.push_back(tag + ": tangent multiset size is not 4n-5");
                }
            }
        }
        auto verdict = classify_psi(rep, true);
        if (verdict.verdict != PsiVerdict::Verdict::NonEqualizedLocal) {
            issues.push_back(tag + ": expected the non-unit-weight local model verdict");
        }
    }
    c.pass = issues.empty();
    c.detail = c.pass ? "levels {-2,0,2}, inner weights {+-1, +-2^(n-2)}, tangent sizes 4n-5, "
                        "verdicts for n=3..6"
                      : std::to_string(issues.size()) + " failures, e.g. " + issues.front();
    return c;
}

// ---------------------------------------------------------------- criterion 8

Criterion criterion8() {
    Criterion c{8, true, ""};
    std::vector<std::string> issues;
    if (am_fm_degree(Int(1), Int(-1), Int(2)) != Int(1)) {
        issues.push_back("orbit line degree is not 1");
    }
    if (am_fm_degree(Int(2), Int(0), Int(1)) != Int(2)) {
        issues.push_back("invariant conic degree is not 2");
    }
    auto edges_hold = [&](const FixedComponentReport& rep, const std::string& tag) {
        auto graph = order_graph(rep);
        for (const auto& e : graph.edges) {
            Int hi = rep.components[static_cast<std::size_t>(e.from)].mu;
            Int lo = rep.components[static_cast<std::size_t>(e.to)].mu;
            if (am_fm_degree(hi, lo, e.tangent_weight_at_lower_end) != Int(1)) {
                issues.push_back(tag + ": coordinate-orbit edge violates the degree identity");
            }
        }
        if (graph.edges.empty()) issues.push_back(tag + ": no edges found");
    };
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            edges_hold(quadric_example_report(n, k),
                       "(quadric n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
        }
    }
    for (int n = 3; n <= 6; ++n) {
        edges_hold(og_example_report(n), "(lines n=" + std::to_string(n) + ")");
    }
    c.pass = issues.empty();
    c.detail = c.pass ? "degree 1 for the orbit line, degree 2 for the invariant conic, and the "
                        "identity on every coordinate-orbit edge of both example families"
                      : std::to_string(issues.size()) + " failures, e.g. " + issues.front();
    return c;
}

// ---------------------------------------------------------------- criterion 9

std::string run_cli(const std::string& args, int* exit_code) {
    std::string cmd = std::string(TORICFLIP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        *exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    *exit_code = status == -1 ? -1 : WEXITSTATUS(status);
    return out;
}

Criterion criterion9() {
    Criterion c{9, true, ""};
    std::vector<std::string> commands{
        "example-quadric --n 3 --k 2 --format json",
        "example-quadric --n 4 --k 1 --format json",
        "example-og --n 3 --format json",
        "example-og --n 4 --format json",
        "cobordism --q-neg 2,1 --zeros 0 --q-pos 1 --format json",
        "blowup --d 2 --omega 1,2 --format json",
    };
    std::vector<std::string> issues;
    for (const auto& cmd : commands) {
        int code = 0;
        std::string first = run_cli(cmd, &code);
        if (code != 0 || first.empty()) {
            issues.push_back("'" + cmd + "' failed (exit " + std::to_string(code) + ")");
            continue;
        }
        for (int rep = 0; rep < 2; ++rep) {
            int code2 = 0;
            std::string again = run_cli(cmd, &code2);
            if (code2 != 0 || again != first) {
                issues.push_back("'" + cmd + "' output varies between runs");
                break;
            }
        }
    }
    c.pass = issues.empty();
    c.detail = c.pass ? "byte-identical output across 3 runs of " +
                            std::to_string(commands.size()) + " commands"
                      : issues.front();
    return c;
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    auto started = clock::now();
    std::vector<Criterion> results;

    auto timed = [&](auto&& fn) {
        auto t0 = clock::now();
        auto r = fn();
        auto dt = std::chrono::duration<double>(clock::now() - t0).count();
        std::ostringstream os;
        os << r.detail << "  [" << static_cast<int>(dt * 1000) << " ms]";
        r.detail = os.str();
        results.push_back(std::move(r));
    };

    timed(criterion1);
    {
        auto t0 = clock::now();
        auto grid = criteria_2_3_4();
        auto dt = std::chrono::duration<double>(clock::now() - t0).count();
        for (auto& r : grid) {
            r.detail += "  [" + std::to_string(static_cast<int>(dt * 1000)) + " ms shared]";
            results.push_back(std::move(r));
        }
    }
    timed(criterion5);
    timed(criterion6);
    timed(criterion7);
    timed(criterion8);
    timed(criterion9);

    std::sort(results.begin(), results.end(),
              [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("criterion %d: %s  %s\n", r.id, r.pass ? "PASS" : "FAIL", r.detail.c_str());
        if (!r.pass) all_pass = false;
    }
    auto total = std::chrono::duration<double>(clock::now() - started).count();
    std::printf("acceptance total: %.1f s, %s\n", total, all_pass ? "all criteria pass" : "FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
