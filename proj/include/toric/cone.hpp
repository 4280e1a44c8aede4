#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/rational.hpp"

namespace toric {

enum class PointLocation { Interior, Boundary, Outside };

// Facet-style description of a cone: { x : eq·x = 0, ineq·x >= 0 }.
// Inequalities may be redundant; rows vanishing on the whole cone are kept
// as equalities, so strictness against every inequality characterizes the
// relative interior.
struct DualDescription {
    std::vector<LatticeVector> inequalities;
    std::vector<LatticeVector> equalities;
};

// Rational polyhedral cone given by primitive, lexicographically sorted,
// minimal generators. Immutable value type; copies share lazily computed
// caches (dual description, generator-basis solver).
class Cone {
public:
    Cone() = default; // zero cone of ambient rank 0; prefer Cone::zero(r)

    static Cone zero(int ambient_rank);
    // Normalizes: primitive parts, zero generators dropped, duplicates merged,
    // generators lexicographically sorted, redundant generators removed.
    static Cone from_generators(std::vector<LatticeVector> gens, int ambient_rank);

    int ambient_rank() const;
    const std::vector<LatticeVector>& generators() const;
    std::size_t n_generators() const { return generators().size(); }
    int dim() const;
    bool is_zero() const { return generators().empty(); }
    bool is_simplicial() const;
    bool is_full_dimensional() const { return dim() == ambient_rank(); }

    // Index of the subgroup spanned by the generators inside the saturation
    // of their span; |det| of the generator matrix when full-dimensional.
    // Throws NotSimplicial for dependent generators.
    Int index() const;

    bool contains(const LatticeVector& x) const;
    bool contains(const RationalVector& x) const;
    bool contains_cone(const Cone& other) const;
    bool in_relative_interior(const LatticeVector& x) const;
    PointLocation locate(const RationalVector& x) const;

    // Coordinates of x in the generator basis (simplicial cones only);
    // nullopt when x is outside the linear span.
    std::optional<std::vector<Rat>> coefficients(const LatticeVector& x) const;

    // Integer form of the same solve: coordinates are numerators/den.
    struct RawCoefficients {
        LatticeVector numerators;
        Int den{1};
        bool in_span = false;
    };
    RawCoefficients raw_coefficients(const LatticeVector& x) const;

    // For simplicial cones: the minimal face whose relative interior holds x.
    // Precondition: contains(x).
    Cone minimal_face_containing(const LatticeVector& x) const;

    // Face spanned by the given generator indices (simplicial cones).
    Cone face(const std::vector<int>& generator_indices) const;
    std::vector<Cone> facets() const;

    const DualDescription& dual() const;

    // One primitive functional per generator: non-negative on the cone,
    // positive exactly on that generator among the cone's generators
    // (simplicial cones only).
    const std::vector<LatticeVector>& generator_duals() const;

    std::string to_string() const;

    friend bool operator==(const Cone& a, const Cone& b);
    friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }

private:
    struct Data;
    explicit Cone(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

// Canonical ordering by generator list; fans store cones in this order.
bool cone_lex_less(const Cone& a, const Cone& b);

struct CommonFaceResult {
    bool is_common_face = false;
    Cone face;               // set when is_common_face
    RationalVector witness;  // set otherwise: lies in relint(face_a) ∩ relint(face_b)
    Cone face_a;
    Cone face_b;
};

// Decides whether c1 ∩ c2 is a face of both cones. Never throws on valid
// input; NotCommonFace is an ordinary result carrying a witness point.
CommonFaceResult common_face(const Cone& c1, const Cone& c2);

// Image fan building block: cone spanned by the primitive parts of the
// projected generators, with duplicates and redundant generators removed.
Cone project_cone(const IntegerMatrix& p, const Cone& c);

// True when relint(c1) ∩ relint(c2) is nonempty; fills the witness.
bool relative_interiors_meet(const Cone& c1, const Cone& c2, RationalVector* witness = nullptr);

} // namespace toric
