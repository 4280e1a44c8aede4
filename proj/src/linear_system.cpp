#include "toric/linear_system.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::uint64_t hash_int(const Int& v) {
    if (v.fits_int64()) {
        std::uint64_t x = static_cast<std::uint64_t>(v.to_int64());
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return x;
    }
    return std::hash<std::string>{}(v.to_string());
}

std::uint64_t hash_row(const LinRow& row) {
    std::uint64_t h = row.is_equality ? 0x9e3779b97f4a7c15ULL : 0x517cc1b727220a95ULL;
    h ^= hash_int(row.constant) + 0x2545F4914F6CDD1DULL + (h << 6) + (h >> 2);
    for (const auto& c : row.coeffs) {
        h ^= hash_int(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace

LinearSystem::LinearSystem(int n_vars)
    : n_vars_(n_vars), eliminated_(static_cast<std::size_t>(n_vars), false) {}

void LinearSystem::normalize(LinRow& row) {
    Int g = gcd_of(row.coeffs);
    g = gcd(g, row.constant);
    if (g > Int(1)) {
        for (auto& c : row.coeffs) c = c / g;
        row.constant = row.constant / g;
    }
    if (row.is_equality) {
        // canonical sign: first nonzero coefficient (or the constant) positive
        int s = 0;
        for (const auto& c : row.coeffs) {
            if (!c.is_zero()) {
                s = c.sign();
                break;
            }
        }
        if (s == 0) s = row.constant.sign();
        if (s < 0) {
            for (auto& c : row.coeffs) c = -c;
            row.constant = -row.constant;
        }
    }
}

void LinearSystem::push_row(LinRow row) {
    normalize(row);
    bool all_zero = is_zero_vector(row.coeffs);
    if (all_zero) {
        if (row.is_equality ? !row.constant.is_zero() : row.constant.sign() < 0) {
            contradiction_ = true;
        }
        return; // tautology or recorded contradiction
    }
    std::uint64_t h = hash_row(row);
    auto [lo, hi] = row_hashes_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
        const LinRow& r = rows_[it->second];
        if (r.is_equality == row.is_equality && r.constant == row.constant &&
            r.coeffs == row.coeffs) {
            return;
        }
    }
    row_hashes_.emplace(h, rows_.size());
    rows_.push_back(std::move(row));
}

void LinearSystem::add_equality(LatticeVector coeffs, Int constant) {
    if (static_cast<int>(coeffs.size()) != n_vars_) {
        throw internal_error("ShapeMismatch", "constraint arity mismatch");
    }
    push_row(LinRow{std::move(coeffs), std::move(constant), true});
}

void LinearSystem::add_inequality(LatticeVector coeffs, Int constant) {
    if (static_cast<int>(coeffs.size()) != n_vars_) {
        throw internal_error("ShapeMismatch", "constraint arity mismatch");
    }
    push_row(LinRow{std::move(coeffs), std::move(constant), false});
}

void LinearSystem::eliminate(int var) {
    if (eliminated_[static_cast<std::size_t>(var)]) {
        throw internal_error("DoubleElimination", "variable already eliminated");
    }
    eliminated_[static_cast<std::size_t>(var)] = true;

    // Prefer an equality pivot.
    std::size_t pivot = rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].is_equality && !rows_[i].coeffs[var].is_zero()) {
            pivot = i;
            break;
        }
    }

    std::vector<LinRow> old;
    old.swap(rows_);
    row_hashes_.clear();

    if (pivot != old.size()) {
        LinRow eq = old[pivot];
        const Int a = eq.coeffs[var];
        SubstStep step;
        step.var = var;
        step.denom = a;
        step.numer_constant = -eq.constant;
        step.numer_coeffs = LatticeVector(static_cast<std::size_t>(n_vars_), Int(0));
        for (int j = 0; j < n_vars_; ++j) {
            if (j != var) step.numer_coeffs[j] = -eq.coeffs[j];
        }
        trace_.push_back(TraceStep{step, std::nullopt});

        const Int a_abs = a.abs();
        const Int a_sign = Int(a.sign());
        for (std::size_t i = 0; i < old.size(); ++i) {
            if (i == pivot) continue;
            LinRow r = std::move(old[i]);
            const Int b = r.coeffs[var];
            if (!b.is_zero()) {
                // |a|·r − sign(a)·b·eq keeps inequality direction
                for (int j = 0; j < n_vars_; ++j) {
                    r.coeffs[j] = a_abs * r.coeffs[j] - a_sign * b * eq.coeffs[j];
                }
                r.constant = a_abs * r.constant - a_sign * b * eq.constant;
            }
            push_row(std::move(r));
        }
        return;
    }

    // Fourier–Motzkin on inequalities.
    FmStep fm;
    fm.var = var;
    std::vector<LinRow> pos, neg;
    for (auto& r : old) {
        int s = r.coeffs[var].sign();
        if (s == 0) {
            push_row(std::move(r));
        } else {
            fm.bounds.push_back(r);
            (s > 0 ? pos : neg).push_back(std::move(r));
        }
    }
    for (const auto& p : pos) {
        for (const auto& n : neg) {
            LinRow combo;
            combo.is_equality = false;
            combo.coeffs = LatticeVector(static_cast<std::size_t>(n_vars_), Int(0));
            const Int cp = -n.coeffs[var]; // > 0
            const Int cn = p.coeffs[var];  // > 0
            for (int j = 0; j < n_vars_; ++j) {
                combo.coeffs[j] = cp * p.coeffs[j] + cn * n.coeffs[j];
            }
            combo.constant = cp * p.constant + cn * n.constant;
            push_row(std::move(combo));
        }
    }
    trace_.push_back(TraceStep{std::nullopt, std::move(fm)});
}

bool LinearSystem::solve(std::vector<Rat>* witness) {
    // Greedy elimination order: substitutions first (no growth), then the
    // variable with the smallest pairing fan-out.
    while (true) {
        int best = -1;
        long long best_score = 0;
        bool best_is_subst = false;
        for (int v = 0; v < n_vars_; ++v) {
            if (eliminated_[static_cast<std::size_t>(v)]) continue;
            long long pos = 0, neg = 0;
            bool in_equality = false;
            for (const auto& r : rows_) {
                int s = r.coeffs[static_cast<std::size_t>(v)].sign();
                if (s == 0) continue;
                if (r.is_equality) in_equality = true;
                (s > 0 ? pos : neg) += 1;
            }
            long long score = in_equality ? -1 : pos * neg - (pos + neg);
            if (best == -1 || (in_equality && !best_is_subst) ||
                (in_equality == best_is_subst && score < best_score)) {
                best = v;
                best_score = score;
                best_is_subst = in_equality;
            }
        }
        if (best == -1) break;
        eliminate(best);
        if (contradiction_) return false;
    }
    if (contradiction_) return false;
    if (!rows_.empty()) {
        throw internal_error("EliminationResidue", "rows remain after eliminating all variables");
    }
    if (witness == nullptr) return true;

    std::vector<Rat> value(static_cast<std::size_t>(n_vars_), Rat(0));
    auto evaluate = [&](const LatticeVector& coeffs, const Int& constant) {
        Rat acc(constant);
        for (int j = 0; j < n_vars_; ++j) {
            if (!coeffs[j].is_zero()) acc = acc + Rat(coeffs[j]) * value[static_cast<std::size_t>(j)];
        }
        return acc;
    };

    for (auto it = trace_.rbegin(); it != trace_.rend(); ++it) {
        if (it->subst) {
            const auto& s = *it->subst;
            value[static_cast<std::size_t>(s.var)] =
                evaluate(s.numer_coeffs, s.numer_constant) / Rat(s.denom);
        } else {
            const auto& fm = *it->fm;
            bool has_lo = false, has_hi = false;
            Rat lo(0), hi(0);
            for (const auto& row : fm.bounds) {
                // coeff·var + rest + c >= 0
                Rat rest = evaluate(row.coeffs, row.constant) -
                           Rat(row.coeffs[fm.var]) * value[static_cast<std::size_t>(fm.var)];
                Rat bound = -rest / Rat(row.coeffs[fm.var]);
                if (row.coeffs[fm.var].sign() > 0) {
                    if (!has_lo || bound > lo) lo = bound;
                    has_lo = true;
                } else {
                    if (!has_hi || bound < hi) hi = bound;
                    has_hi = true;
                }
            }
            Rat chosen(0);
            if (has_lo && has_hi) {
                if (lo > hi) throw internal_error("WitnessBounds", "inconsistent bounds in backfill");
                chosen = (lo + hi) / Rat(2);
            } else if (has_lo) {
                chosen = lo;
            } else if (has_hi) {
                chosen = hi;
            }
            value[static_cast<std::size_t>(fm.var)] = chosen;
        }
    }
    *witness = std::move(value);
    return true;
}

} // namespace toric
