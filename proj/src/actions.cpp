#include "toric/actions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

// mu-descending map ordering
struct IntDesc {
    bool operator()(const Int& a, const Int& b) const { return a > b; }
};

std::string make_label(ComponentKind kind, int dimension, const Int& mu) {
    std::ostringstream os;
    os << component_kind_name(kind) << "(dim=" << dimension << ",mu=" << mu << ")";
    return os.str();
}

void sort_ints(std::vector<Int>& v) {
    std::sort(v.begin(), v.end(), [](const Int& a, const Int& b) { return a < b; });
}

bool all_unit(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& w) { return w.abs() == Int(1); });
}

// Splits a tangent multiset into (pos, neg) normal weights, counting zeros.
struct SplitWeights {
    std::vector<Int> pos;
    std::vector<Int> neg;
    int zeros = 0;
};
SplitWeights split_weights(const std::vector<Int>& tangent) {
    SplitWeights out;
    for (const auto& w : tangent) {
        int s = w.sign();
        if (s > 0) {
            out.pos.push_back(w);
        } else if (s < 0) {
            out.neg.push_back(w);
        } else {
            ++out.zeros;
        }
    }
    sort_ints(out.pos);
    sort_ints(out.neg);
    return out;
}

void finalize_report(FixedComponentReport& r) {
    std::sort(r.components.begin(), r.components.end(),
              [](const FixedComponent& a, const FixedComponent& b) { return a.mu > b.mu; });
    r.source_index = -1;
    r.sink_index = -1;
    int distinct_nonempty = 0;
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        if (r.components[i].kind == ComponentKind::Empty) continue;
        ++distinct_nonempty;
        if (r.source_index < 0) r.source_index = static_cast<int>(i);
        r.sink_index = static_cast<int>(i);
    }
    if (distinct_nonempty == 0) {
        throw internal_error("EmptyFixedLocus", "no nonempty fixed components found");
    }
    r.criticality = distinct_nonempty - 1;
    r.bandwidth = r.components[static_cast<std::size_t>(r.source_index)].mu -
                  r.components[static_cast<std::size_t>(r.sink_index)].mu;
}

// Asserts every representative of the component produces the same normal
// multisets and the expected count of along-component (zero) directions.
void attach_weights(FixedComponent& comp, const std::vector<std::vector<Int>>& tangents,
                    int expected_dimension) {
    bool first = true;
    for (const auto& tangent : tangents) {
        SplitWeights sw = split_weights(tangent);
        if (first) {
            comp.normal_weights_pos = std::move(sw.pos);
            comp.normal_weights_neg = std::move(sw.neg);
            if (expected_dimension >= 0 && sw.zeros != expected_dimension) {
                throw internal_error("ComponentDimension",
                                     "zero-weight count " + std::to_string(sw.zeros) +
                                         " does not match component dimension " +
                                         std::to_string(expected_dimension));
            }
            comp.dimension = sw.zeros;
            first = false;
        } else {
            if (sw.pos != comp.normal_weights_pos || sw.neg != comp.normal_weights_neg ||
                sw.zeros != comp.dimension) {
                throw internal_error("ComponentWeights",
                                     "normal weights differ between representatives of one component");
            }
        }
    }
    comp.equalized = all_unit(comp.normal_weights_pos) && all_unit(comp.normal_weights_neg);
    comp.analyzed = !first;
}

} // namespace

std::string component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::LinearSubspace: return "LinearSubspace";
        case ComponentKind::QuadricInSubspace: return "QuadricInSubspace";
        case ComponentKind::SubGrassmannian: return "SubGrassmannian";
        case ComponentKind::InnerOG: return "InnerOG";
        case ComponentKind::Empty: return "Empty";
    }
    return "Unknown";
}

bool validate_action(const DiagonalAction& a) {
    if (a.weights.size() < 2) {
        throw precondition_error("TrivialAction", "need at least two homogeneous coordinates");
    }
    bool distinct = false;
    for (const auto& w : a.weights) {
        if (w != a.weights[0]) distinct = true;
    }
    if (!distinct) {
        throw precondition_error("TrivialAction", "all coordinate weights are equal");
    }
    Int g = 0;
    for (const auto& w : a.weights) g = gcd(g, w - a.weights[0]);
    return g == Int(1);
}

void validate_quadric(const DiagonalAction& a, const PairingQuadric& q) {
    const int n = static_cast<int>(a.weights.size());
    std::set<int> seen;
    for (const auto& [i, j] : q.pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw precondition_error("NonInvariantForm", "pair index out of range");
        }
        if (i >= j) throw precondition_error("NonInvariantForm", "pair indices must satisfy i < j");
        if (!seen.insert(i).second || !seen.insert(j).second) {
            throw precondition_error("NonInvariantForm", "indices must be distinct across monomials");
        }
    }
    for (int s : q.squares) {
        if (s < 0 || s >= n) throw precondition_error("NonInvariantForm", "square index out of range");
        if (!seen.insert(s).second) {
            throw precondition_error("NonInvariantForm", "indices must be distinct across monomials");
        }
    }
    if (q.pairs.empty() && q.squares.empty()) {
        throw precondition_error("NonInvariantForm", "the form has no monomials");
    }
    bool have = false;
    Int total;
    auto check_weight = [&](const Int& w) {
        if (!have) {
            total = w;
            have = true;
        } else if (w != total) {
            throw precondition_error("NonInvariantForm",
                                     "monomials carry different total weights; the form is not invariant");
        }
    };
    for (const auto& [i, j] : q.pairs) check_weight(a.weights[static_cast<std::size_t>(i)] + a.weights[static_cast<std::size_t>(j)]);
    for (int s : q.squares) check_weight(a.weights[static_cast<std::size_t>(s)] * Int(2));
}

std::optional<int> quadric_partner(const PairingQuadric& q, int i) {
    for (const auto& [a, b] : q.pairs) {
        if (a == i) return b;
        if (b == i) return a;
    }
    return std::nullopt;
}

bool on_quadric(const PairingQuadric& q, int i) {
    return std::find(q.squares.begin(), q.squares.end(), i) == q.squares.end();
}

bool polar_vanishes(const PairingQuadric& q, int i, int j) {
    if (i == j) throw internal_error("PolarDiagonal", "polar test needs distinct indices");
    auto p = quadric_partner(q, i);
    return !(p && *p == j);
}

std::vector<std::pair<Int, std::vector<int>>> fixed_components_pn(const DiagonalAction& a) {
    validate_action(a);
    std::map<Int, std::vector<int>, IntDesc> levels;
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        levels[a.weights[i] + a.linearization_offset].push_back(static_cast<int>(i));
    }
    std::vector<std::pair<Int, std::vector<int>>> out;
    out.reserve(levels.size());
    for (auto& [mu, coords] : levels) out.emplace_back(mu, std::move(coords));
    return out;
}

QuadricRestriction restrict_quadric(const DiagonalAction& a, const PairingQuadric& q,
                                    const Int& level_mu) {
    validate_quadric(a, q);
    auto levels = fixed_components_pn(a);
    const std::vector<int>* coords = nullptr;
    for (const auto& [mu, cs] : levels) {
        if (mu == level_mu) coords = &cs;
    }
    if (coords == nullptr) {
        throw precondition_error("NoSuchLevel", "no coordinates at the requested weight");
    }
    auto in_level = [&](int i) {
        return std::binary_search(coords->begin(), coords->end(), i);
    };
    int monomials = 0;
    for (const auto& [i, j] : q.pairs) {
        if (in_level(i) && in_level(j)) ++monomials;
    }
    for (int s : q.squares) {
        if (in_level(s)) ++monomials;
    }
    QuadricRestriction res;
    if (monomials == 0) {
        res.identically_zero = true;
        res.dimension = static_cast<int>(coords->size()) - 1;
    } else {
        res.identically_zero = false;
        res.dimension = static_cast<int>(coords->size()) - 2;
    }
    return res;
}

Int am_fm_degree(const Int& mu_plus, const Int& mu_minus, const Int& delta_plus) {
    if (!(mu_plus > mu_minus)) {
        throw precondition_error("BadWeights", "need mu_plus > mu_minus");
    }
    if (delta_plus.sign() <= 0) {
        throw precondition_error("BadWeights", "tangent weight must be positive");
    }
    Int diff = mu_plus - mu_minus;
    if (!(diff % delta_plus).is_zero()) {
        throw precondition_error("NonIntegralDegree",
                                 "weight difference " + diff.to_string() +
                                     " is not a multiple of the tangent weight " +
                                     delta_plus.to_string());
    }
    return diff / delta_plus;
}

DiagonalAction plucker_action(const DiagonalAction& a, int p) {
    const int n = static_cast<int>(a.weights.size());
    if (p < 1 || p >= n) {
        throw precondition_error("BadSubsetSize", "need 1 <= p < number of coordinates");
    }
    DiagonalAction out;
    out.linearization_offset = a.linearization_offset;
    std::vector<int> idx(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Int w = 0;
        for (int i : idx) w += a.weights[static_cast<std::size_t>(i)];
        out.weights.push_back(w);
        int k = p - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - p + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int i = k + 1; i < p; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

std::vector<std::pair<std::pair<int, int>, Int>> og_fixed_points(const DiagonalAction& a,
                                                                 const PairingQuadric& q) {
    validate_quadric(a, q);
    const int n = static_cast<int>(a.weights.size());
    std::vector<std::pair<std::pair<int, int>, Int>> out;
    for (int i = 0; i < n; ++i) {
        if (!on_quadric(q, i)) continue;
        for (int j = i + 1; j < n; ++j) {
            if (!on_quadric(q, j)) continue;
            if (!polar_vanishes(q, i, j)) continue;
            out.push_back({{i, j}, a.weights[static_cast<std::size_t>(i)] +
                                       a.weights[static_cast<std::size_t>(j)] +
                                       a.linearization_offset});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });
    return out;
}

std::vector<Int> og_tangent_weights(const DiagonalAction& a, const PairingQuadric& q,
                                    std::pair<int, int> plane) {
    validate_quadric(a, q);
    auto [i, j] = plane;
    if (i > j) std::swap(i, j);
    if (i == j || !on_quadric(q, i) || !on_quadric(q, j) || !polar_vanishes(q, i, j)) {
        throw precondition_error("NotIsotropic",
                                 "coordinate plane is not an isotropic plane of the form");
    }
    const int n = static_cast<int>(a.weights.size());
    std::set<int> excluded{i, j};
    if (auto p = quadric_partner(q, i)) excluded.insert(*p);
    if (auto p = quadric_partner(q, j)) excluded.insert(*p);

    std::vector<Int> tangent;
    for (int c = 0; c < n; ++c) {
        if (excluded.count(c)) continue;
        tangent.push_back(a.weights[static_cast<std::size_t>(c)] - a.weights[static_cast<std::size_t>(i)]);
        tangent.push_back(a.weights[static_cast<std::size_t>(c)] - a.weights[static_cast<std::size_t>(j)]);
    }
    tangent.push_back(-(a.weights[static_cast<std::size_t>(i)] + a.weights[static_cast<std::size_t>(j)]));
    sort_ints(tangent);
    return tangent;
}

namespace {

std::vector<Int> pn_tangent_weights(const DiagonalAction& a, int at) {
    std::vector<Int> tangent;
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        if (static_cast<int>(i) == at) continue;
        tangent.push_back(a.weights[i] - a.weights[static_cast<std::size_t>(at)]);
    }
    return tangent;
}

std::vector<Int> quadric_tangent_weights(const DiagonalAction& a, const PairingQuadric& q,
                                         int at) {
    if (!on_quadric(q, at)) {
        throw precondition_error("NoTorusFixedRepresentative",
                                 "coordinate point does not lie on the quadric");
    }
    auto partner = quadric_partner(q, at);
    if (!partner) {
        throw precondition_error("NoTorusFixedRepresentative",
                                 "coordinate point is a singular point of the form");
    }
    std::vector<Int> tangent;
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        if (static_cast<int>(i) == at || static_cast<int>(i) == *partner) continue;
        tangent.push_back(a.weights[i] - a.weights[static_cast<std::size_t>(at)]);
    }
    return tangent;
}

} // namespace

FixedComponentReport analyze_pn(const DiagonalAction& a) {
    FixedComponentReport rep;
    rep.variety = "pn";
    rep.action = a;
    for (auto& [mu, coords] : fixed_components_pn(a)) {
        FixedComponent comp;
        comp.mu = mu;
        comp.kind = ComponentKind::LinearSubspace;
        std::vector<std::vector<Int>> tangents;
        for (int c : coords) {
            comp.representatives.push_back({c});
            tangents.push_back(pn_tangent_weights(a, c));
        }
        attach_weights(comp, tangents, static_cast<int>(coords.size()) - 1);
        comp.label = make_label(comp.kind, comp.dimension, comp.mu);
        rep.components.push_back(std::move(comp));
    }
    finalize_report(rep);
    return rep;
}

FixedComponentReport analyze_quadric(const DiagonalAction& a, const PairingQuadric& q) {
    validate_quadric(a, q);
    FixedComponentReport rep;
    rep.variety = "quadric";
    rep.action = a;
    rep.quadric = q;
    for (auto& [mu, coords] : fixed_components_pn(a)) {
        QuadricRestriction res = restrict_quadric(a, q, mu);
        FixedComponent comp;
        comp.mu = mu;
        if (res.identically_zero) {
            comp.kind = ComponentKind::LinearSubspace;
        } else if (res.dimension < 0) {
            comp.kind = ComponentKind::Empty;
            comp.dimension = -1;
            comp.label = make_label(comp.kind, comp.dimension, comp.mu);
            rep.components.push_back(std::move(comp));
            continue;
        } else {
            comp.kind = ComponentKind::QuadricInSubspace;
        }
        std::vector<std::vector<Int>> tangents;
        for (int c : coords) {
            if (!on_quadric(q, c)) continue;
            comp.representatives.push_back({c});
            tangents.push_back(quadric_tangent_weights(a, q, c));
        }
        if (tangents.empty()) {
            throw precondition_error("NoTorusFixedRepresentative",
                                     "no coordinate point of the level lies on the quadric");
        }
        attach_weights(comp, tangents, res.dimension);
        comp.label = make_label(comp.kind, comp.dimension, comp.mu);
        rep.components.push_back(std::move(comp));
    }
    finalize_report(rep);
    return rep;
}

FixedComponentReport analyze_og(const DiagonalAction& a, const PairingQuadric& q) {
    auto points = og_fixed_points(a, q);
    if (points.empty()) {
        throw precondition_error("NoTorusFixedRepresentative",
                                 "the form admits no isotropic coordinate planes");
    }
    std::map<Int, std::vector<std::pair<int, int>>, IntDesc> levels;
    for (const auto& [plane, mu] : points) levels[mu].push_back(plane);

    FixedComponentReport rep;
    rep.variety = "og2";
    rep.action = a;
    rep.quadric = q;
    const Int mu_max = levels.begin()->first;
    const Int mu_min = levels.rbegin()->first;
    for (auto& [mu, planes] : levels) {
        FixedComponent comp;
        comp.mu = mu;
        comp.kind = (mu == mu_max || mu == mu_min) ? ComponentKind::SubGrassmannian
                                                   : ComponentKind::InnerOG;
        std::vector<std::vector<Int>> tangents;
        for (const auto& plane : planes) {
            comp.representatives.push_back({plane.first, plane.second});
            tangents.push_back(og_tangent_weights(a, q, plane));
        }
        attach_weights(comp, tangents, -1);
        comp.label = make_label(comp.kind, comp.dimension, comp.mu);
        rep.components.push_back(std::move(comp));
    }
    finalize_report(rep);
    return rep;
}

std::pair<int, Int> criticality_and_bandwidth(const FixedComponentReport& r) {
    int nonempty = 0;
    for (const auto& c : r.components) {
        if (c.kind != ComponentKind::Empty) ++nonempty;
    }
    if (nonempty < 2) {
        throw precondition_error("TrivialAction", "need at least two fixed components");
    }
    return {r.criticality, r.bandwidth};
}

NormalWeights component_normal_weights(const FixedComponentReport& r, int component_index) {
    if (component_index < 0 || component_index >= static_cast<int>(r.components.size())) {
        throw precondition_error("NoTorusFixedRepresentative", "component index out of range");
    }
    const auto& comp = r.components[static_cast<std::size_t>(component_index)];
    if (comp.kind == ComponentKind::Empty || !comp.analyzed) {
        throw precondition_error("NoTorusFixedRepresentative",
                                 "component has no torus-fixed representative");
    }
    return NormalWeights{comp.normal_weights_pos, comp.normal_weights_neg, comp.equalized};
}

OrderGraph order_graph(const FixedComponentReport& r) {
    OrderGraph graph;
    const auto& comps = r.components;
    auto comp_of_coord = [&](int coord) {
        for (std::size_t i = 0; i < comps.size(); ++i) {
            for (const auto& rep : comps[i].representatives) {
                if (rep.size() == 1 && rep[0] == coord) return static_cast<int>(i);
            }
        }
        return -1;
    };

    std::set<std::pair<int, int>> seen;
    auto add_edge = [&](int hi, int lo, const Int& drop, const Int& tangent) {
        if (seen.insert({hi, lo}).second) {
            graph.edges.push_back(OrderEdge{hi, lo, drop, tangent});
        }
    };

    if (r.variety == "pn" || r.variety == "quadric") {
        const int n = static_cast<int>(r.action.weights.size());
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const Int& wa = r.action.weights[static_cast<std::size_t>(a)];
                const Int& wb = r.action.weights[static_cast<std::size_t>(b)];
                if (!(wa > wb)) continue;
                if (r.quadric) {
                    // the coordinate line must lie on the quadric
                    if (!on_quadric(*r.quadric, a) || !on_quadric(*r.quadric, b)) continue;
                    if (!polar_vanishes(*r.quadric, a, b)) continue;
                }
                int ca = comp_of_coord(a), cb = comp_of_coord(b);
                if (ca < 0 || cb < 0) continue;
                add_edge(ca, cb, wa - wb, wa - wb);
            }
        }
    } else if (r.variety == "og2") {
        if (!r.quadric) throw internal_error("MissingForm", "og2 report without a form");
        const auto& q = *r.quadric;
        auto comp_of_plane = [&](int i, int j) {
            if (i > j) std::swap(i, j);
            for (std::size_t c = 0; c < comps.size(); ++c) {
                for (const auto& rep : comps[c].representatives) {
                    if (rep.size() == 2 && rep[0] == i && rep[1] == j) return static_cast<int>(c);
                }
            }
            return -1;
        };
        // Pencils <e_s, e_lo + t e_hi> inside the quadric: endpoints (s, lo)
        // and (s, hi); need both planes isotropic and B(e_lo, e_hi) = 0.
        const int n = static_cast<int>(r.action.weights.size());
        for (int s = 0; s < n; ++s) {
            for (int lo = 0; lo < n; ++lo) {
                for (int hi = 0; hi < n; ++hi) {
                    if (s == lo || s == hi || lo == hi) continue;
                    const Int& wlo = r.action.weights[static_cast<std::size_t>(lo)];
                    const Int& whi = r.action.weights[static_cast<std::size_t>(hi)];
                    if (!(whi > wlo)) continue;
                    int c_lo = comp_of_plane(s, lo);
                    int c_hi = comp_of_plane(s, hi);
                    if (c_lo < 0 || c_hi < 0) continue;
                    if (!polar_vanishes(q, lo, hi)) continue;
                    add_edge(c_hi, c_lo, whi - wlo, whi - wlo);
                }
            }
        }
    } else {
        throw internal_error("UnknownVariety", "order graph for variety '" + r.variety + "'");
    }

    auto is_extremal = [&](int idx) { return idx == r.source_index || idx == r.sink_index; };
    for (const auto& e : graph.edges) {
        bool from_inner = !is_extremal(e.from);
        bool to_inner = !is_extremal(e.to);
        if (from_inner && to_inner) graph.inner_only_extremal = false;
    }
    return graph;
}

PsiVerdict classify_psi(const FixedComponentReport& r, bool picard_rank_one) {
    PsiVerdict v;
    v.picard_rank_one_assumed = picard_rank_one;

    bool all_equalized = true;
    for (const auto& comp : r.components) {
        if (comp.kind == ComponentKind::Empty) continue;
        if (!comp.analyzed) {
            throw precondition_error("IncompleteReport",
                                     "component '" + comp.label + "' carries no normal weights");
        }
        if (!comp.equalized) all_equalized = false;
    }

    v.criticality_two = (r.criticality == 2);
    OrderGraph graph = order_graph(r);
    v.order_condition = graph.inner_only_extremal;

    std::vector<int> inner;
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        if (r.components[i].kind == ComponentKind::Empty) continue;
        if (static_cast<int>(i) == r.source_index || static_cast<int>(i) == r.sink_index) continue;
        inner.push_back(static_cast<int>(i));
    }
    bool nu_ge_two = true;
    for (int idx : inner) {
        const auto& comp = r.components[static_cast<std::size_t>(idx)];
        if (comp.normal_weights_pos.size() < 2 || comp.normal_weights_neg.size() < 2) {
            nu_ge_two = false;
        }
    }
    bool extremal_positive_dim =
        r.components[static_cast<std::size_t>(r.source_index)].dimension > 0 &&
        r.components[static_cast<std::size_t>(r.sink_index)].dimension > 0;
    v.bordism_after_blowup = nu_ge_two || (picard_rank_one && extremal_positive_dim);

    if (all_equalized) {
        v.note = "action equalized at every component: the weighted blow-up degenerates to the "
                 "classical blow-up and the induced map is an isomorphism (identity case)";
    }

    if (r.criticality < 2) {
        v.verdict = PsiVerdict::Verdict::NotApplicable;
        v.reason = "criticality<2: the induced birational map is an isomorphism";
        return v;
    }
    if (r.criticality > 2 && !v.order_condition) {
        v.verdict = PsiVerdict::Verdict::NotApplicable;
        v.reason = "criticality>2 without the order condition on inner components";
        return v;
    }
    if (!v.bordism_after_blowup) {
        v.verdict = PsiVerdict::Verdict::NotApplicable;
        v.reason = "bordism hypothesis unverified: some inner component has fewer than two "
                   "positive or negative normal directions and the Picard-rank-one fallback "
                   "needs positive-dimensional extremal components";
        return v;
    }

    bool inner_equalized = true;
    for (int idx : inner) {
        if (!r.components[static_cast<std::size_t>(idx)].equalized) inner_equalized = false;
    }
    v.verdict = inner_equalized ? PsiVerdict::Verdict::AtiyahLocal
                                : PsiVerdict::Verdict::NonEqualizedLocal;
    return v;
}

DiagonalAction quadric_example_action(int n, int k) {
    if (n < 1 || k < 1 || k > n) {
        throw precondition_error("BadBlockSizes", "need n >= k >= 1");
    }
    DiagonalAction a;
    a.weights.assign(static_cast<std::size_t>(2 * n + 1), Int(0));
    for (int i = 0; i < k; ++i) a.weights[static_cast<std::size_t>(i)] = 1;
    for (int i = n + 1; i <= n + k; ++i) a.weights[static_cast<std::size_t>(i)] = -1;
    return a;
}

PairingQuadric standard_odd_quadric(int n) {
    PairingQuadric q;
    for (int i = 0; i < n; ++i) q.pairs.push_back({i, n + 1 + i});
    q.squares.push_back(n);
    return q;
}

FixedComponentReport quadric_example_report(int n, int k) {
    return analyze_quadric(quadric_example_action(n, k), standard_odd_quadric(n));
}

FixedComponentReport og_example_report(int n) {
    if (n < 3) throw precondition_error("BadBlockSizes", "need n >= 3");
    return analyze_og(quadric_example_action(n, n), standard_odd_quadric(n));
}

} // namespace toric
