#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

bool is_zero_vector(const LatticeVector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Int gcd_of(const LatticeVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

bool is_primitive(const LatticeVector& v) { return gcd_of(v) == Int(1); }

LatticeVector primitive_part(const LatticeVector& v) {
    Int g = gcd_of(v);
    if (g <= Int(1)) return v;
    LatticeVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x / g);
    return out;
}

LatticeVector negate(const LatticeVector& v) {
    LatticeVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(-x);
    return out;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw internal_error("ShapeMismatch", "vector addition size mismatch");
    LatticeVector out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw internal_error("ShapeMismatch", "dot product size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int compare_lex(const LatticeVector& a, const LatticeVector& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

bool lex_less(const LatticeVector& a, const LatticeVector& b) { return compare_lex(a, b) < 0; }

LatticeVector unit_vector(int rank, int index) {
    LatticeVector v(static_cast<std::size_t>(rank), Int(0));
    v[static_cast<std::size_t>(index)] = 1;
    return v;
}

std::string to_string(const LatticeVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

IntegerMatrix::IntegerMatrix(std::vector<LatticeVector> r) : rows(std::move(r)) {
    for (const auto& row : rows) {
        if (row.size() != rows[0].size()) {
            throw precondition_error("NotRectangular", "matrix rows must have equal length");
        }
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    std::vector<LatticeVector> rows(n, LatticeVector(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return IntegerMatrix(std::move(rows));
}

IntegerMatrix IntegerMatrix::transpose() const {
    std::vector<LatticeVector> out(n_cols(), LatticeVector(n_rows(), Int(0)));
    for (std::size_t i = 0; i < n_rows(); ++i) {
        for (std::size_t j = 0; j < n_cols(); ++j) out[j][i] = rows[i][j];
    }
    return IntegerMatrix(std::move(out));
}

LatticeVector IntegerMatrix::apply(const LatticeVector& v) const {
    if (v.size() != n_cols()) throw internal_error("ShapeMismatch", "matrix apply size mismatch");
    LatticeVector out;
    out.reserve(n_rows());
    for (const auto& row : rows) out.push_back(dot(row, v));
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.n_cols() != b.n_rows()) throw internal_error("ShapeMismatch", "matrix product size mismatch");
    std::vector<LatticeVector> out(a.n_rows(), LatticeVector(b.n_cols(), Int(0)));
    for (std::size_t i = 0; i < a.n_rows(); ++i) {
        for (std::size_t k = 0; k < a.n_cols(); ++k) {
            if (a.rows[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b.n_cols(); ++j) {
                out[i][j] += a.rows[i][k] * b.rows[k][j];
            }
        }
    }
    return IntegerMatrix(std::move(out));
}

Int determinant(const IntegerMatrix& m) {
    std::size_t n = m.n_rows();
    if (n != m.n_cols()) throw internal_error("ShapeMismatch", "determinant of non-square matrix");
    if (n == 0) return 1;
    auto a = m.rows;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (!a[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev; // exact (Bareiss)
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

int rank(const IntegerMatrix& m) {
    auto a = m.rows;
    std::size_t nr = m.n_rows(), nc = m.n_cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t pivot = nr;
        for (std::size_t i = r; i < nr; ++i) {
            if (!a[i][col].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == nr) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (a[i][col].is_zero()) continue;
            Int f1 = a[r][col], f2 = a[i][col];
            Int g = gcd(f1, f2);
            f1 = f1 / g;
            f2 = f2 / g;
            for (std::size_t j = col; j < nc; ++j) {
                a[i][j] = a[i][j] * f1 - a[r][j] * f2;
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

namespace {

void row_sub(std::vector<LatticeVector>& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void col_sub(std::vector<LatticeVector>& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q.is_zero()) return;
    for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] -= q * m[i][src];
}

void col_swap(std::vector<LatticeVector>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.size(); ++i) std::swap(m[i][a], m[i][b]);
}

void row_negate(std::vector<LatticeVector>& m, std::size_t r) {
    for (auto& x : m[r]) x = -x;
}

} // namespace

SnfResult snf(const IntegerMatrix& m) {
    if (m.n_rows() == 0 || m.n_cols() == 0) {
        throw precondition_error("EmptyMatrix", "snf requires a nonempty matrix");
    }
    std::size_t nr = m.n_rows(), nc = m.n_cols();
    auto a = m.rows;
    auto u = IntegerMatrix::identity(nr).rows;
    auto v = IntegerMatrix::identity(nc).rows;

    std::size_t steps = std::min(nr, nc);
    for (std::size_t t = 0; t < steps; ++t) {
        // Locate a smallest-magnitude nonzero pivot in the trailing block.
        auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
            std::pair<std::size_t, std::size_t> best{nr, nc};
            Int best_abs = 0;
            for (std::size_t i = t; i < nr; ++i) {
                for (std::size_t j = t; j < nc; ++j) {
                    if (a[i][j].is_zero()) continue;
                    Int aa = a[i][j].abs();
                    if (best.first == nr || aa < best_abs) {
                        best = {i, j};
                        best_abs = aa;
                    }
                }
            }
            return best;
        };

        auto [pi, pj] = find_pivot();
        if (pi == nr) break; // trailing block is zero
        std::swap(a[t], a[pi]);
        std::swap(u[t], u[pi]);
        col_swap(a, t, pj);
        col_swap(v, t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Clear the pivot column.
            for (std::size_t i = t + 1; i < nr; ++i) {
                while (!a[i][t].is_zero()) {
                    Int q = a[i][t] / a[t][t];
                    row_sub(a, i, t, q);
                    row_sub(u, i, t, q);
                    if (!a[i][t].is_zero()) {
                        std::swap(a[t], a[i]);
                        std::swap(u[t], u[i]);
                    }
                }
            }
            // Clear the pivot row; column operations may dirty the column again.
            for (std::size_t j = t + 1; j < nc; ++j) {
                while (!a[t][j].is_zero()) {
                    Int q = a[t][j] / a[t][t];
                    col_sub(a, j, t, q);
                    col_sub(v, j, t, q);
                    if (!a[t][j].is_zero()) {
                        col_swap(a, t, j);
                        col_swap(v, t, j);
                    }
                }
            }
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (!a[i][t].is_zero()) dirty = true;
            }
            if (dirty) continue;
            // Divisibility: the pivot must divide the whole trailing block.
            for (std::size_t i = t + 1; i < nr && !dirty; ++i) {
                for (std::size_t j = t + 1; j < nc && !dirty; ++j) {
                    if (!(a[i][j] % a[t][t]).is_zero()) {
                        row_sub(a, t, i, Int(-1)); // add row i to row t
                        row_sub(u, t, i, Int(-1));
                        dirty = true;
                    }
                }
            }
        }
        if (a[t][t].sign() < 0) {
            row_negate(a, t);
            row_negate(u, t);
        }
    }

    return SnfResult{IntegerMatrix(std::move(u)), IntegerMatrix(std::move(a)), IntegerMatrix(std::move(v))};
}

HnfResult hnf(const IntegerMatrix& m) {
    std::size_t nr = m.n_rows(), nc = m.n_cols();
    auto h = m.rows;
    auto u = IntegerMatrix::identity(nr).rows;

    auto floor_div = [](const Int& x, const Int& d) { // d > 0
        Int r = x % d;
        if (r.sign() < 0) r += d;
        return (x - r) / d;
    };

    std::size_t pr = 0;
    for (std::size_t col = 0; col < nc && pr < nr; ++col) {
        std::size_t pivot = nr;
        for (std::size_t i = pr; i < nr; ++i) {
            if (!h[i][col].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == nr) continue;
        std::swap(h[pr], h[pivot]);
        std::swap(u[pr], u[pivot]);
        for (std::size_t i = pr + 1; i < nr; ++i) {
            while (!h[i][col].is_zero()) {
                Int q = h[i][col] / h[pr][col];
                row_sub(h, i, pr, q);
                row_sub(u, i, pr, q);
                if (!h[i][col].is_zero()) {
                    std::swap(h[pr], h[i]);
                    std::swap(u[pr], u[i]);
                }
            }
        }
        if (h[pr][col].sign() < 0) {
            row_negate(h, pr);
            row_negate(u, pr);
        }
        for (std::size_t i = 0; i < pr; ++i) {
            Int q = floor_div(h[i][col], h[pr][col]);
            row_sub(h, i, pr, q);
            row_sub(u, i, pr, q);
        }
        ++pr;
    }
    return HnfResult{IntegerMatrix(std::move(h)), IntegerMatrix(std::move(u))};
}

namespace {

// Integer inverse of a unimodular matrix, via cofactor solves against identity
// columns (sizes here are tiny).
IntegerMatrix unimodular_inverse(const IntegerMatrix& b) {
    std::size_t n = b.n_rows();
    Int d = determinant(b);
    if (!(d == Int(1) || d == Int(-1))) {
        throw internal_error("NotUnimodular", "expected |det| = 1, got " + d.to_string());
    }
    // adj(b)[i][j] = cofactor(j, i); inverse = adj / det = adj * det.
    std::vector<LatticeVector> inv(n, LatticeVector(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<LatticeVector> minor;
            minor.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                LatticeVector row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == i) continue;
                    row.push_back(b.rows[r][c]);
                }
                minor.push_back(std::move(row));
            }
            Int cof = minor.empty() ? Int(1) : determinant(IntegerMatrix(std::move(minor)));
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = cof * d;
        }
    }
    return IntegerMatrix(std::move(inv));
}

} // namespace

IntegerMatrix quotient_projection(const LatticeVector& v) {
    std::size_t n1 = v.size();
    if (n1 < 2) throw precondition_error("NonPrimitive", "vector must have length at least 2");
    if (!is_primitive(v)) {
        throw precondition_error("NonPrimitive", "gcd of entries of " + to_string(v) + " is not 1");
    }

    std::vector<LatticeVector> p_rows;

    // Preferred completion: drop the last unit entry of v, keep standard
    // basis vectors elsewhere as the remaining columns.
    std::size_t unit = n1;
    for (std::size_t i = 0; i < n1; ++i) {
        if (v[i].abs() == Int(1)) unit = i;
    }
    if (unit < n1) {
        std::vector<LatticeVector> cols;
        cols.push_back(v);
        for (std::size_t j = 0; j < n1; ++j) {
            if (j == unit) continue;
            cols.push_back(unit_vector(static_cast<int>(n1), static_cast<int>(j)));
        }
        IntegerMatrix b = IntegerMatrix(std::move(cols)).transpose(); // columns: v, e_j
        IntegerMatrix b_inv = unimodular_inverse(b);
        p_rows.assign(b_inv.rows.begin() + 1, b_inv.rows.end());
    } else {
        // General completion: U·v = e1 from the Smith normal form of v as a column.
        IntegerMatrix col(std::vector<LatticeVector>(v.size()));
        for (std::size_t i = 0; i < n1; ++i) col.rows[i] = LatticeVector{v[i]};
        SnfResult s = snf(col);
        p_rows.assign(s.u.rows.begin() + 1, s.u.rows.end());
    }

    IntegerMatrix p(std::move(p_rows));
    if (!is_zero_vector(p.apply(v))) {
        throw internal_error("ProjectionCheck", "quotient projection does not annihilate v");
    }
    SnfResult check = snf(p);
    for (std::size_t i = 0; i + 1 < n1; ++i) {
        if (check.d.rows[i][i] != Int(1)) {
            throw internal_error("ProjectionCheck", "quotient projection is not surjective");
        }
    }
    return p;
}

IntegerMatrix canonicalize_projection(const IntegerMatrix& p) { return hnf(p).h; }

} // namespace toric
