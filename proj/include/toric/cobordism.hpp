#pragma once

#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

// One-parameter subgroup data for the affine model: lattice rank n+1, block
// boundaries 1 < d1 <= d2 < n+1, positive weights on the outer blocks, and
// the assembled vector v = (-q_1,...,-q_{d1}, 0,...,0, q_{d2+1},...,q_{n+1}).
struct CobordismSetup {
    int n_plus_1 = 0;
    int d1 = 0;
    int d2 = 0;
    std::vector<Int> q_neg;
    std::vector<Int> q_pos;
    LatticeVector v;
    bool normalized_by_gcd = false; // weights were divided by their common gcd
    bool within_hypotheses = true;  // false when built with the unchecked escape hatch
};

// Validates block sizes (throws BadBlockSizes) and weight positivity, divides
// the weights by their common gcd when needed, and assembles v.
CobordismSetup make_setup(std::vector<Int> q_neg, int zero_count, std::vector<Int> q_pos);

// Exploration variant: accepts d1 = 1 or d2 = n, marking the result as
// outside the construction's hypotheses. Still requires positive weights and
// at least one weight on each side.
CobordismSetup make_setup_unchecked(std::vector<Int> q_neg, int zero_count,
                                    std::vector<Int> q_pos);

// The full orthant cone generated by the standard basis.
Cone orthant_cone(const CobordismSetup& setup);
// Facet omitting the i-th basis ray (1-based index).
Cone orthant_facet(const CobordismSetup& setup, int omitted);

// Fans of the two open subsets of the affine space on which the limit at 0
// (resp. infinity) fails to exist: faces of the orthant not containing the
// whole positive (resp. negative) coordinate block.
struct BFans {
    Fan delta_plus;
    Fan delta_minus;
};
BFans fans_B(const CobordismSetup& setup);

// One maximal quotient cone: the projection of the facet omitting the given
// coordinate. `image_index` is the index of the subgroup generated by the raw
// generator images (this equals the omitted weight and carries the stabilizer
// data of the quotient); `cone_index` is the index of the normalized cone,
// which can be smaller when some generator image fails to be primitive.
struct QuotientConeRecord {
    int omitted_coordinate = 0; // 1-based
    Cone cone;
    Int image_index{1};
    Int cone_index{1};
};

// Everything about the quotient step: projection, image cone, the two
// projected fans (subdivisions of the image cone), and their certificates.
// The sink variety lives on the projection of delta_plus and the source on
// the projection of delta_minus.
struct CobordismFans {
    Cone delta;
    Fan delta_plus;
    Fan delta_minus;
    IntegerMatrix projection;
    Cone delta_bar;
    Fan quot_plus;  // projection of delta_plus; the sink variety's fan
    Fan quot_minus; // projection of delta_minus; the source variety's fan
    std::vector<QuotientConeRecord> sink_cones;   // from the plus-block facets
    std::vector<QuotientConeRecord> source_cones; // from the minus-block facets
    SubdivisionReport subdivision_sink;   // pieces of quot_plus vs delta_bar
    SubdivisionReport subdivision_source; // pieces of quot_minus vs delta_bar
};
CobordismFans quotient_fans(const CobordismSetup& setup, bool canonical_basis = false);

struct FlipClassification {
    enum class Kind { Atiyah, NonEqualized };
    Kind kind = Kind::Atiyah;
    std::vector<Int> nonzero_weights; // sorted entries of v without zeros
    // Smoothness of the two quotient sides measured by the image indices (all
    // equal to 1); the weight test and this test always agree. The sink lives
    // on the projected plus side, the source on the projected minus side.
    bool smooth_minus = false;
    bool smooth_plus = false;
    // Same question for the normalized cones: the underlying varieties can be
    // smooth even for a non-equalized flip when a generator image is a
    // multiple of a primitive vector.
    bool variety_smooth_minus = false;
    bool variety_smooth_plus = false;
    bool within_hypotheses = true;
};
// Weight dichotomy cross-checked against quotient-cone smoothness; a mismatch
// raises an internal error. The second overload reuses computed quotient data.
FlipClassification classify_flip(const CobordismSetup& setup);
FlipClassification classify_flip(const CobordismSetup& setup, const CobordismFans& fans);

// Fans of the two line-bundle-like compactifications: maximal cones are the
// outer-block orthant facets joined with -v (plus side) or v (minus side).
struct BundleFans {
    Fan lambda_plus;
    Fan lambda_minus;
};
BundleFans bundle_fans(const CobordismSetup& setup);

// The glued fan: lambda_plus ∪ faces-of-orthant ∪ lambda_minus, with the
// fixed-locus bookkeeping (sink and source fans, inner dimension d2 - d1).
struct BordismFan {
    Fan sigma_tilde;
    Fan lambda_plus;
    Fan lambda_minus;
    Fan sink_fan;   // quotient fan carrying the sink variety
    Fan source_fan; // quotient fan carrying the source variety
    int inner_dim = 0;
    ValidationReport validation;          // of sigma_tilde
    ValidationReport validation_plus;     // of lambda_plus alone
    ValidationReport validation_minus;    // of lambda_minus alone
};
BordismFan bordism_fan(const CobordismSetup& setup);
BordismFan bordism_fan(const CobordismSetup& setup, const CobordismFans& fans);

enum class LimitDirection { ToZero, ToInfinity };

struct LimitResult {
    bool exists = false;
    Cone cone; // set when exists
};

// Orbit-limit query: the cone of `f` whose distinguished point is the limit
// of the one-parameter subgroup w applied to the distinguished point of
// sigma (w negated for ToInfinity); no limit when the flow leaves the
// support. Throws ConeNotInFan when sigma is not a member of f.
LimitResult limit_in_fan(const Fan& f, const Cone& sigma, const LatticeVector& w,
                         LimitDirection direction);

} // namespace toric
