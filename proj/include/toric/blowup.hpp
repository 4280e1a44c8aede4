#pragma once

#include <vector>

#include "toric/fan.hpp"
#include "toric/rational.hpp"

namespace toric {

// Weight data for the star-like subdivision of the standard orthant
// sigma = <e_1,...,e_n>: the inserted ray is omega = (0^d, q_{d+1},...,q_n)
// with 0 < q_{d+1} <= ... <= q_n. The default contract requires 2 <= d < n;
// d in {0, 1} is accepted under a legacy flag for the classical origin
// blow-up examples.
struct WeightedBlowupSpec {
    int ambient_rank = 0; // n
    int fixed_block = 0;  // d: number of leading zero weights
    LatticeVector omega;
    bool legacy = false;
};

WeightedBlowupSpec make_blowup_spec(int fixed_block, std::vector<Int> positive_weights,
                                    bool legacy = false);

// Fan with maximal cones <e_1,...,e_d, omega, e_{d+1},...,ê_i,...,e_n> for
// i = d+1..n, plus all faces; validated and certified as a subdivision of
// the orthant.
struct StarSubdivision {
    Fan fan;
    SubdivisionReport refinement; // vs the orthant
    ValidationReport validation;
};
StarSubdivision weighted_star_subdivision(const WeightedBlowupSpec& spec);

// Signature of the exceptional fiber: the positive weights, with the flag
// for the unweighted (all ones) case.
struct WPSSignature {
    std::vector<Int> weights; // sorted, positive
    Int weight_gcd{1};
    bool is_straight_projective_space = false;
};
WPSSignature exceptional_fiber(const WeightedBlowupSpec& spec);

// Weights of a one-parameter subgroup on the chart of a maximal simplicial
// cone: the coordinates of v in the generator basis (integral exactly when
// the cone is smooth).
struct ChartWeights {
    std::vector<Rat> weights; // one per generator, in sorted-generator order
    bool non_reduced_chart = false; // cone index > 1: weights live on the cover
};
ChartWeights chart_weights(const Fan& f, const LatticeVector& v, const Cone& c);

} // namespace toric
