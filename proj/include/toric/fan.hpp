#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

struct ValidationReport;

// Collection of cones sharing an ambient rank, kept deduplicated and in
// canonical (lexicographic) order. Immutable value type; copies share data.
// Internally each cone is a bitmask over the fan's ray table; fans built from
// maximal cones keep their faces implicit until the cone list is requested.
class Fan {
public:
    Fan();

    // Stores exactly the given cones (deduplicated).
    static Fan from_cones(int ambient_rank, std::vector<Cone> cones);
    // Adds every face of every given cone (simplicial cones only).
    static Fan from_maximal_cones(int ambient_rank, const std::vector<Cone>& maximal);
    static Fan face_fan(const Cone& c);

    int ambient_rank() const;
    const std::vector<Cone>& cones() const; // materialized on demand for face-closed fans
    const std::vector<Cone>& maximal_cones() const;
    const std::vector<LatticeVector>& rays() const;
    std::size_t size() const;
    bool contains_cone(const Cone& c) const;

    // Set by validate_fan once the face-closure check passes.
    bool closed_under_faces() const;

    friend bool operator==(const Fan& a, const Fan& b);
    friend ValidationReport validate_fan(const Fan& f, bool all_pairs);

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

struct FanIssue {
    std::string kind; // "MissingFace" | "BadPair"
    std::string detail;
    Cone cone_a;
    Cone cone_b;          // missing face / second cone
    RationalVector witness; // BadPair only
};

struct ValidationReport {
    std::vector<FanIssue> closure_violations;
    std::vector<FanIssue> pair_violations;
    bool valid() const { return closure_violations.empty() && pair_violations.empty(); }
};

// Checks the fan axioms: every face of every cone belongs to the collection,
// and any two cones intersect in a common face. Pairwise checks run over the
// maximal cones; for a face-closed family this implies the property for all
// pairs. `all_pairs` forces the exhaustive quadratic check.
ValidationReport validate_fan(const Fan& f, bool all_pairs = false);

struct SubdivisionReport {
    bool simplicial_full_dim = false;
    bool contained = false;       // every piece inside the subdivided cone
    bool pairwise_ok = false;     // pieces meet along common faces
    bool facets_matched = false;  // exact cover certificate
    bool sample_covered = false;  // deterministic sample points all covered
    std::vector<std::string> issues;
    bool ok() const {
        return simplicial_full_dim && contained && pairwise_ok && facets_matched && sample_covered;
    }
};

// Certifies that `pieces` subdivide `whole`: full-dimensional simplicial
// pieces contained in `whole` with pairwise disjoint relative interiors whose
// union is all of `whole` (facet-matching certificate plus a deterministic
// sample-membership check).
SubdivisionReport verify_subdivision(const std::vector<Cone>& pieces, const Cone& whole);

} // namespace toric
