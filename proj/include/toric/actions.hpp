#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/int.hpp"

namespace toric {

// Diagonal one-parameter action on the homogeneous coordinates of a
// projective space, plus the linearization offset added uniformly to every
// fixed-component weight.
struct DiagonalAction {
    std::vector<Int> weights;
    Int linearization_offset{0};
};

// Invariant quadric of the shape sum(x_i x_j over pairs) + sum(x_s^2):
// indices are distinct across all monomials and pair indices satisfy i < j.
struct PairingQuadric {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> squares;
};

// Throws TrivialAction when all weights coincide; returns whether the induced
// projective action is faithful (gcd of pairwise weight differences is 1).
bool validate_action(const DiagonalAction& a);

// Shape and invariance checks; throws NonInvariantForm when some monomial has
// a different total weight than the others.
void validate_quadric(const DiagonalAction& a, const PairingQuadric& q);

// Index paired with i by the polar form, if any.
std::optional<int> quadric_partner(const PairingQuadric& q, int i);
bool on_quadric(const PairingQuadric& q, int i);     // Q(e_i) = 0
bool polar_vanishes(const PairingQuadric& q, int i, int j); // B(e_i, e_j) = 0, i != j

// Coordinates grouped by weight; mu = weight + offset; sorted by mu
// descending (source level first).
std::vector<std::pair<Int, std::vector<int>>> fixed_components_pn(const DiagonalAction& a);

// Restriction of the quadric to one mu-level's coordinate subspace.
struct QuadricRestriction {
    bool identically_zero = false;
    int dimension = -1; // of the restricted quadric; -1 means empty
};
QuadricRestriction restrict_quadric(const DiagonalAction& a, const PairingQuadric& q,
                                    const Int& level_mu);

// Degree of an invariant rational curve from the weight drop across it:
// (mu_plus - mu_minus) / delta_plus, which must divide exactly.
Int am_fm_degree(const Int& mu_plus, const Int& mu_minus, const Int& delta_plus);

// Induced action on p-fold wedge coordinates, lexicographic subset order.
DiagonalAction plucker_action(const DiagonalAction& a, int p);

// Coordinate 2-planes spanning lines on the quadric, with their weights;
// sorted by mu descending, then lexicographically.
std::vector<std::pair<std::pair<int, int>, Int>> og_fixed_points(const DiagonalAction& a,
                                                                 const PairingQuadric& q);

// Tangent weights of the isotropic Grassmannian at a coordinate plane
// S = <e_i, e_j>: Hom(S, S^perp/S) plus the wedge-dual line. Sorted multiset.
std::vector<Int> og_tangent_weights(const DiagonalAction& a, const PairingQuadric& q,
                                    std::pair<int, int> plane);

enum class ComponentKind { LinearSubspace, QuadricInSubspace, SubGrassmannian, InnerOG, Empty };
std::string component_kind_name(ComponentKind k);

struct FixedComponent {
    std::string label;
    Int mu{0};
    int dimension = -1; // -1 for empty components
    ComponentKind kind = ComponentKind::Empty;
    std::vector<Int> normal_weights_pos; // sorted ascending
    std::vector<Int> normal_weights_neg; // sorted ascending
    bool equalized = false;
    std::vector<std::vector<int>> representatives; // coordinate indices / index pairs
    bool analyzed = false;
};

struct FixedComponentReport {
    std::string variety; // "pn" | "quadric" | "og2"
    DiagonalAction action;
    std::optional<PairingQuadric> quadric;
    std::vector<FixedComponent> components; // mu descending
    int criticality = 0;
    Int bandwidth{0};
    int source_index = -1; // component with maximal mu among nonempty ones
    int sink_index = -1;   // minimal mu
};

FixedComponentReport analyze_pn(const DiagonalAction& a);
FixedComponentReport analyze_quadric(const DiagonalAction& a, const PairingQuadric& q);
FixedComponentReport analyze_og(const DiagonalAction& a, const PairingQuadric& q);

// Recomputed from the component list (levels with a nonempty component).
std::pair<int, Int> criticality_and_bandwidth(const FixedComponentReport& r);

// Stored normal-weight data; throws NoTorusFixedRepresentative for empty or
// unanalyzed components.
struct NormalWeights {
    std::vector<Int> pos;
    std::vector<Int> neg;
    bool equalized = false;
};
NormalWeights component_normal_weights(const FixedComponentReport& r, int component_index);

// Invariant-curve incidence between fixed components: an edge runs from the
// higher-mu component to the lower-mu one whenever a coordinate orbit (pn,
// quadric) or an isotropic pencil (og2) joins torus-fixed representatives.
struct OrderEdge {
    int from = -1; // component index, higher mu
    int to = -1;   // lower mu
    Int mu_drop{0};
    Int tangent_weight_at_lower_end{0};
};
struct OrderGraph {
    std::vector<OrderEdge> edges;
    bool inner_only_extremal = true;
};
OrderGraph order_graph(const FixedComponentReport& r);

// Decision procedure for the local flip type of the birational map between
// the weighted-blow-up exceptional divisors.
struct PsiVerdict {
    enum class Verdict { AtiyahLocal, NonEqualizedLocal, NotApplicable };
    Verdict verdict = Verdict::NotApplicable;
    std::string reason; // set for NotApplicable
    std::string note;   // extra context (e.g. the fully equalized identity case)
    bool criticality_two = false;
    bool bordism_after_blowup = false;
    bool picard_rank_one_assumed = false;
    bool order_condition = false;
};
PsiVerdict classify_psi(const FixedComponentReport& r, bool picard_rank_one);

// Ready-made inputs for the worked examples.
DiagonalAction quadric_example_action(int n, int k); // H_k on P^{2n}
PairingQuadric standard_odd_quadric(int n);          // x_0 x_{n+1} + ... + x_{n-1} x_{2n} + x_n^2
FixedComponentReport quadric_example_report(int n, int k);
FixedComponentReport og_example_report(int n); // H_n on the line Grassmannian of the quadric

} // namespace toric
