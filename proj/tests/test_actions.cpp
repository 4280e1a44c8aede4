#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "toric/actions.hpp"
#include "toric/errors.hpp"

using namespace toric;

namespace {

std::vector<Int> ints(std::vector<long long> xs) {
    std::vector<Int> v;
    for (auto x : xs) v.push_back(Int(x));
    return v;
}

DiagonalAction act(std::vector<long long> ws, long long offset = 0) {
    DiagonalAction a;
    a.weights = ints(std::move(ws));
    a.linearization_offset = offset;
    return a;
}

std::multiset<long long> bag(const std::vector<Int>& v) {
    std::multiset<long long> out;
    for (const auto& x : v) out.insert(x.to_int64());
    return out;
}

const FixedComponent& comp_at_mu(const FixedComponentReport& r, long long mu) {
    for (const auto& c : r.components) {
        if (c.mu == Int(mu)) return c;
    }
    REQUIRE(false);
    return r.components.front();
}

} // namespace

TEST_CASE("fixed components group coordinates by weight") {
    auto levels = fixed_components_pn(act({1, 1, 0, 0, -1, -1, 0}));
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].first == Int(1));
    CHECK(levels[0].second == std::vector<int>{0, 1});
    CHECK(levels[1].first == Int(0));
    CHECK(levels[1].second == std::vector<int>{2, 3, 6});
    CHECK(levels[2].first == Int(-1));
    CHECK(levels[2].second == std::vector<int>{4, 5});

    auto two_points = fixed_components_pn(act({1, -1}));
    CHECK(two_points.size() == 2);
    CHECK(two_points[0].second.size() == 1);
    CHECK(two_points[1].second.size() == 1);

    CHECK_THROWS_WITH_AS(fixed_components_pn(act({0, 0, 0})), doctest::Contains("TrivialAction"),
                         precondition_error);
}

TEST_CASE("linearization offset shifts every level") {
    auto levels = fixed_components_pn(act({1, 0, -1}, 5));
    CHECK(levels[0].first == Int(6));
    CHECK(levels[2].first == Int(4));
}

TEST_CASE("quadric restriction per level") {
    // H_2 on the five-dimensional quadric: n = 3, k = 2
    auto a = quadric_example_action(3, 2);
    auto q = standard_odd_quadric(3);
    CHECK(restrict_quadric(a, q, Int(1)).identically_zero);
    auto level0 = restrict_quadric(a, q, Int(0));
    CHECK(!level0.identically_zero);
    CHECK(level0.dimension == 1); // 2n-2k-1

    // k = n: the zero level is a single square coordinate, hence empty
    auto an = quadric_example_action(3, 3);
    auto level0n = restrict_quadric(an, standard_odd_quadric(3), Int(0));
    CHECK(!level0n.identically_zero);
    CHECK(level0n.dimension == -1);
    CHECK(restrict_quadric(an, standard_odd_quadric(3), Int(1)).identically_zero);

    // non-invariant form
    PairingQuadric bad;
    bad.pairs = {{0, 1}, {2, 3}};
    CHECK_THROWS_WITH_AS(restrict_quadric(act({1, 1, 1, 0}), bad, Int(0)),
                         doctest::Contains("NonInvariantForm"), precondition_error);
}

TEST_CASE("degree from the weight drop across an invariant curve") {
    CHECK(am_fm_degree(Int(1), Int(-1), Int(2)) == Int(1));
    CHECK(am_fm_degree(Int(2), Int(0), Int(1)) == Int(2));
    CHECK_THROWS_WITH_AS(am_fm_degree(Int(1), Int(-1), Int(3)),
                         doctest::Contains("NonIntegralDegree"), precondition_error);
    CHECK_THROWS_AS(am_fm_degree(Int(0), Int(1), Int(1)), precondition_error);
}

TEST_CASE("wedge action on subset coordinates") {
    auto p2 = plucker_action(act({1, 0, -1}), 2);
    CHECK(p2.weights == ints({1, 0, -1})); // e0^e1, e0^e2, e1^e2

    auto p1 = plucker_action(act({3, 1, -2}), 1);
    CHECK(p1.weights == ints({3, 1, -2}));

    auto big = plucker_action(act({1, 1, 1, 0, -1, -1, -1}), 2);
    CHECK(big.weights.size() == 21);
    std::map<long long, int> mult;
    for (const auto& w : big.weights) ++mult[w.to_int64()];
    CHECK(mult == std::map<long long, int>{{2, 3}, {1, 3}, {0, 9}, {-1, 3}, {-2, 3}});

    CHECK_THROWS_AS(plucker_action(act({1, -1}), 2), precondition_error);
}

TEST_CASE("isotropic coordinate planes of the odd quadric") {
    auto a = quadric_example_action(3, 3); // V-weights (1,1,1,0,-1,-1,-1)
    auto q = standard_odd_quadric(3);
    auto points = og_fixed_points(a, q);
    CHECK(points.size() == 12);
    std::map<long long, int> levels;
    for (const auto& [plane, mu] : points) ++levels[mu.to_int64()];
    CHECK(levels == std::map<long long, int>{{2, 3}, {0, 6}, {-2, 3}});

    // excluded pairs: (0,3) fails because e_3 is the square coordinate,
    // (0,4) because the two indices pair under the polar form
    for (const auto& [plane, mu] : points) {
        CHECK(plane != std::pair<int, int>{0, 3});
        CHECK(plane != std::pair<int, int>{0, 4});
    }
    CHECK(!on_quadric(q, 3));
    CHECK(!polar_vanishes(q, 0, 4));
}

TEST_CASE("tangent weights of the line Grassmannian at coordinate planes") {
    auto a = quadric_example_action(3, 3);
    auto q = standard_odd_quadric(3);

    auto inner = og_tangent_weights(a, q, {0, 5});
    CHECK(bag(inner) == std::multiset<long long>{-2, -1, 0, 0, 0, 1, 2});
    CHECK(inner.size() == 7); // 4n-5 with n = 3

    auto source = og_tangent_weights(a, q, {0, 1});
    CHECK(source.size() == 7);
    for (const auto& w : source) CHECK(w.sign() <= 0);

    CHECK_THROWS_WITH_AS(og_tangent_weights(a, q, {0, 4}), doctest::Contains("NotIsotropic"),
                         precondition_error);
    CHECK_THROWS_AS(og_tangent_weights(a, q, {0, 3}), precondition_error);
}

TEST_CASE("projective space report") {
    auto rep = analyze_pn(act({1, 1, 0, 0, -1, -1, 0}));
    CHECK(rep.criticality == 2);
    CHECK(rep.bandwidth == Int(2));
    CHECK(rep.components.size() == 3);
    CHECK(comp_at_mu(rep, 1).dimension == 1);
    CHECK(comp_at_mu(rep, 0).dimension == 2);
    CHECK(comp_at_mu(rep, -1).dimension == 1);
    // source chart has no positive tangent directions
    CHECK(comp_at_mu(rep, 1).normal_weights_pos.empty());
    CHECK(comp_at_mu(rep, -1).normal_weights_neg.empty());
    auto [crit, bw] = criticality_and_bandwidth(rep);
    CHECK(crit == 2);
    CHECK(bw == Int(2));
}

TEST_CASE("criticality and bandwidth can differ") {
    auto rep = analyze_pn(act({1, -1}));
    CHECK(rep.criticality == 1);
    CHECK(rep.bandwidth == Int(2));
}

TEST_CASE("quadric example: fixed locus shape and normal weights") {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k < n; ++k) {
            auto rep = quadric_example_report(n, k);
            CHECK(rep.criticality == 2);
            CHECK(rep.bandwidth == Int(2));
            const auto& src = comp_at_mu(rep, 1);
            const auto& inn = comp_at_mu(rep, 0);
            const auto& snk = comp_at_mu(rep, -1);
            CHECK(src.kind == ComponentKind::LinearSubspace);
            CHECK(src.dimension == k - 1);
            CHECK(snk.dimension == k - 1);
            CHECK(inn.kind == ComponentKind::QuadricInSubspace);
            CHECK(inn.dimension == 2 * n - 2 * k - 1);
            CHECK(inn.equalized);
            // extremal normal multiplicities: (2n-2k+1) ones and (k-1) twos
            std::multiset<long long> expected;
            for (int i = 0; i < 2 * n - 2 * k + 1; ++i) expected.insert(-1);
            for (int i = 0; i < k - 1; ++i) expected.insert(-2);
            CHECK(bag(src.normal_weights_neg) == expected);
            CHECK(src.normal_weights_pos.empty());
            std::multiset<long long> expected_pos;
            for (auto x : expected) expected_pos.insert(-x);
            CHECK(bag(snk.normal_weights_pos) == expected_pos);
            // equalized overall exactly when k = 1
            bool overall = src.equalized && inn.equalized && snk.equalized;
            CHECK(overall == (k == 1));
        }
    }
}

TEST_CASE("quadric example at k = n has an empty inner level") {
    auto rep = quadric_example_report(3, 3);
    CHECK(rep.criticality == 1); // only two nonempty levels
    CHECK(rep.bandwidth == Int(2));
    CHECK(comp_at_mu(rep, 0).kind == ComponentKind::Empty);
    CHECK(comp_at_mu(rep, 0).dimension == -1);
    CHECK(comp_at_mu(rep, 1).dimension == 2); // P^{n-1}
}

TEST_CASE("line Grassmannian example: levels, weights, sizes") {
    for (int n = 3; n <= 5; ++n) {
        auto rep = og_example_report(n);
        CHECK(rep.criticality == 2);
        CHECK(rep.bandwidth == Int(4));
        REQUIRE(rep.components.size() == 3);
        CHECK(rep.components[0].mu == Int(2));
        CHECK(rep.components[1].mu == Int(0));
        CHECK(rep.components[2].mu == Int(-2));
        const auto& inner = rep.components[1];
        CHECK(inner.kind == ComponentKind::InnerOG);
        CHECK(!inner.equalized);
        std::multiset<long long> pos{1}, neg{-1};
        for (int i = 0; i < n - 2; ++i) {
            pos.insert(2);
            neg.insert(-2);
        }
        CHECK(bag(inner.normal_weights_pos) == pos);
        CHECK(bag(inner.normal_weights_neg) == neg);
        // tangent multiset size 4n-5 at every enumerated fixed point
        for (const auto& rep_pair : inner.representatives) {
            auto t = og_tangent_weights(rep.action, *rep.quadric,
                                        {rep_pair[0], rep_pair[1]});
            CHECK(t.size() == static_cast<std::size_t>(4 * n - 5));
        }
        CHECK(inner.dimension == 2 * n - 3);
        const auto& src = rep.components[0];
        CHECK(src.kind == ComponentKind::SubGrassmannian);
        CHECK(src.dimension == 2 * n - 4);
        CHECK(src.normal_weights_pos.empty());
    }
}

TEST_CASE("order graph for the quadric example") {
    auto rep = quadric_example_report(3, 2);
    auto graph = order_graph(rep);
    CHECK(graph.inner_only_extremal);
    std::set<std::pair<int, int>> edges;
    for (const auto& e : graph.edges) edges.insert({e.from, e.to});
    // components sorted by mu: 0 = source, 1 = inner, 2 = sink
    CHECK(edges == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
    for (const auto& e : graph.edges) {
        CHECK(am_fm_degree(rep.components[static_cast<std::size_t>(e.from)].mu,
                           rep.components[static_cast<std::size_t>(e.to)].mu,
                           e.tangent_weight_at_lower_end) == Int(1));
    }
}

TEST_CASE("order graph for a criticality-one action") {
    auto rep = analyze_pn(act({1, -1}));
    auto graph = order_graph(rep);
    CHECK(graph.edges.size() == 1);
    CHECK(graph.edges[0].from == 0);
    CHECK(graph.edges[0].to == 1);
}

TEST_CASE("order graph for the line Grassmannian example") {
    auto rep = og_example_report(3);
    auto graph = order_graph(rep);
    CHECK(graph.inner_only_extremal);
    bool src_inner = false, inner_snk = false;
    for (const auto& e : graph.edges) {
        if (e.from == 0 && e.to == 1) src_inner = true;
        if (e.from == 1 && e.to == 2) inner_snk = true;
        CHECK(am_fm_degree(rep.components[static_cast<std::size_t>(e.from)].mu,
                           rep.components[static_cast<std::size_t>(e.to)].mu,
                           e.tangent_weight_at_lower_end) == Int(1));
    }
    CHECK(src_inner);
    CHECK(inner_snk);
}

TEST_CASE("verdicts for the worked examples") {
    for (int n = 3; n <= 5; ++n) {
        for (int k = 2; k < n; ++k) {
            auto v = classify_psi(quadric_example_report(n, k), true);
            CHECK(v.verdict == PsiVerdict::Verdict::AtiyahLocal);
            CHECK(v.criticality_two);
            CHECK(v.bordism_after_blowup);
        }
    }
    for (int n = 3; n <= 5; ++n) {
        auto v = classify_psi(og_example_report(n), true);
        CHECK(v.verdict == PsiVerdict::Verdict::NonEqualizedLocal);
    }
    // criticality one: not applicable
    auto crit1 = classify_psi(analyze_pn(act({1, -1})), true);
    CHECK(crit1.verdict == PsiVerdict::Verdict::NotApplicable);
    CHECK(crit1.reason.find("criticality<2") == 0);
    // k = 1: fully equalized, extremal components are points
    auto k1 = classify_psi(quadric_example_report(3, 1), true);
    CHECK(k1.verdict == PsiVerdict::Verdict::NotApplicable);
    CHECK(!k1.note.empty()); // identity / classical blow-up note
    CHECK(!k1.bordism_after_blowup);
}

TEST_CASE("extremal tangent signs match the flow direction") {
    for (int n = 3; n <= 5; ++n) {
        auto rep = og_example_report(n);
        for (const auto& plane : rep.components.front().representatives) { // source level
            for (const auto& w :
                 og_tangent_weights(rep.action, *rep.quadric, {plane[0], plane[1]})) {
                CHECK(w.sign() <= 0);
            }
        }
        for (const auto& plane : rep.components.back().representatives) { // sink level
            for (const auto& w :
                 og_tangent_weights(rep.action, *rep.quadric, {plane[0], plane[1]})) {
                CHECK(w.sign() >= 0);
            }
        }
    }
}

TEST_CASE("faithfulness is the gcd of pairwise weight differences") {
    CHECK(validate_action(act({1, 0, -1})));
    CHECK(validate_action(act({2, 1})));
    CHECK(!validate_action(act({3, 1})));    // every difference is even
    CHECK(!validate_action(act({4, 0, 2}))); // gcd of differences is 2
}

TEST_CASE("criticality and bandwidth are invariant under offset changes") {
    for (long long offset : {0LL, 3LL, -7LL}) {
        auto rep = analyze_quadric(
            DiagonalAction{quadric_example_action(3, 2).weights, Int(offset)},
            standard_odd_quadric(3));
        CHECK(rep.criticality == 2);
        CHECK(rep.bandwidth == Int(2));
        auto v = classify_psi(rep, true);
        CHECK(v.verdict == PsiVerdict::Verdict::AtiyahLocal);
    }
}
