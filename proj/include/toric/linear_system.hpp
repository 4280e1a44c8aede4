#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/rational.hpp"

namespace toric {

// One affine constraint: coeffs·x + constant (= | >=) 0.
struct LinRow {
    LatticeVector coeffs;
    Int constant{0};
    bool is_equality{false};
};

// Exact-arithmetic affine constraint system with variable elimination:
// equality substitution when possible, Fourier–Motzkin otherwise.
// Elimination steps are traced so a witness can be reconstructed.
class LinearSystem {
public:
    explicit LinearSystem(int n_vars);

    int n_vars() const { return n_vars_; }
    void add_equality(LatticeVector coeffs, Int constant = 0);
    void add_inequality(LatticeVector coeffs, Int constant = 0);

    // Eliminates `var` from every row. Rows that still mention an eliminated
    // variable never reappear; surviving rows have a zero coefficient there.
    void eliminate(int var);

    // Rows over the not-yet-eliminated variables (projection consumers).
    const std::vector<LinRow>& rows() const { return rows_; }

    // Eliminates every remaining variable and decides feasibility. On success
    // an exact rational witness is filled in when requested.
    bool solve(std::vector<Rat>* witness = nullptr);

private:
    struct SubstStep {
        int var;
        LatticeVector numer_coeffs; // x_var = (numer·x + numer_constant) / denom
        Int numer_constant;
        Int denom;
    };
    struct FmStep {
        int var;
        std::vector<LinRow> bounds; // rows that mentioned var at elimination time
    };
    struct TraceStep {
        std::optional<SubstStep> subst;
        std::optional<FmStep> fm;
    };

    void push_row(LinRow row);
    static void normalize(LinRow& row);

    int n_vars_;
    std::vector<LinRow> rows_;
    std::unordered_multimap<std::uint64_t, std::size_t> row_hashes_;
    std::vector<bool> eliminated_;
    std::vector<TraceStep> trace_;
    bool contradiction_ = false;
};

} // namespace toric
