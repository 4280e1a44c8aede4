#pragma once

#include <cstddef>
#include <vector>

#include "toric/int.hpp"
#include "toric/rational.hpp"

namespace toric {

// A lattice element of N ≅ Z^r, coordinates in a fixed basis.
using LatticeVector = std::vector<Int>;

// A rational point, stored as integer numerators over one positive denominator.
struct RationalVector {
    LatticeVector num;
    Int den{1};

    static RationalVector from_integers(LatticeVector v) { return RationalVector{std::move(v), Int(1)}; }
    std::size_t size() const { return num.size(); }
    Rat at(std::size_t i) const { return Rat(num[i], den); }
};

bool is_zero_vector(const LatticeVector& v);
Int gcd_of(const LatticeVector& v);                 // gcd of entries, 0 for the zero vector
bool is_primitive(const LatticeVector& v);          // gcd of nonzero entries is 1
LatticeVector primitive_part(const LatticeVector& v); // v / gcd(v); zero vector unchanged
LatticeVector negate(const LatticeVector& v);
LatticeVector add(const LatticeVector& a, const LatticeVector& b);
Int dot(const LatticeVector& a, const LatticeVector& b);
int compare_lex(const LatticeVector& a, const LatticeVector& b);
bool lex_less(const LatticeVector& a, const LatticeVector& b);
LatticeVector unit_vector(int rank, int index);
std::string to_string(const LatticeVector& v);

// Rectangular matrix of lattice vectors (rows), arbitrary-precision entries.
struct IntegerMatrix {
    std::vector<LatticeVector> rows;

    IntegerMatrix() = default;
    explicit IntegerMatrix(std::vector<LatticeVector> r);

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return rows.empty() ? 0 : rows[0].size(); }
    const Int& at(std::size_t i, std::size_t j) const { return rows[i][j]; }

    static IntegerMatrix identity(std::size_t n);
    IntegerMatrix transpose() const;
    LatticeVector apply(const LatticeVector& v) const; // matrix * column vector

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;
};

// Determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const IntegerMatrix& m);
int rank(const IntegerMatrix& m);

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal,
// non-negative, with each diagonal entry dividing the next.
struct SnfResult {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
};
SnfResult snf(const IntegerMatrix& m);

// Row-style Hermite normal form: h = u * m, u unimodular, h upper staircase
// with positive pivots and reduced entries above each pivot.
struct HnfResult {
    IntegerMatrix h;
    IntegerMatrix u;
};
HnfResult hnf(const IntegerMatrix& m);

// For primitive v of length n+1 ≥ 2, an n×(n+1) matrix p with p·v = 0 and p
// surjective onto Z^n (SNF [I | 0]). The choice is deterministic: complete v
// with standard basis vectors at the last unit entry of v when one exists,
// otherwise via an SNF-based completion. Throws NonPrimitive otherwise.
IntegerMatrix quotient_projection(const LatticeVector& v);

// Hermite-normal-form representative of the row lattice of p; composing the
// projection with this transform fixes one basis of the quotient lattice.
IntegerMatrix canonicalize_projection(const IntegerMatrix& p);

} // namespace toric
