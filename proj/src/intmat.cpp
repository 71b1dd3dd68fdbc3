#include "hyperchow/intmat.hpp"

#include <algorithm>
#include <cassert>

#include "hyperchow/errors.hpp"

namespace hyperchow {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    assert(a_.size() == size_t(rows) * cols);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<Int> IntMatrix::row(int i) const {
    std::vector<Int> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::col(int j) const {
    std::vector<Int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void IntMatrix::set_col(int j, const std::vector<Int>& v) {
    assert(int(v.size()) == rows_);
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

void IntMatrix::swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
}

void IntMatrix::swap_cols(int j, int k) {
    if (j == k) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, j), at(i, k));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::negate_row(int i) {
    for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(int j) {
    for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    assert(x.cols_ == y.rows_);
    IntMatrix z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            const Int& f = x.at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < y.cols_; ++j) z.at(i, j) += f * y.at(k, j);
        }
    return z;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    IntMatrix z(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] - y.a_[i];
    return z;
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
    assert(int(v.size()) == m.cols());
    std::vector<Int> r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    assert(a.rows() == b.rows());
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

IntMatrix select_rows(const IntMatrix& m, const std::vector<int>& rows) {
    IntMatrix r(int(rows.size()), m.cols());
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(int(i), j) = m.at(rows[i], j);
    return r;
}

IntMatrix select_cols(const IntMatrix& m, const std::vector<int>& cols) {
    IntMatrix r(m.rows(), int(cols.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(i, int(j)) = m.at(i, cols[j]);
    return r;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& a = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    const int n = std::min(m.rows(), m.cols());

    for (int t = 0; t < n; ++t) {
        // minimal nonzero |entry| in the trailing block
        auto find_pivot = [&]() -> std::pair<int, int> {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < a.rows(); ++i)
                for (int j = t; j < a.cols(); ++j) {
                    if (a.at(i, j) == 0) continue;
                    Int mag = abs(a.at(i, j));
                    if (pi < 0 || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            return {pi, pj};
        };

        auto [pi, pj] = find_pivot();
        if (pi < 0) break;  // trailing block is zero

        for (;;) {
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool dirty = false;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = round_div(a.at(i, t), a.at(t, t));
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (a.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = round_div(a.at(t, j), a.at(t, t));
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                std::tie(pi, pj) = find_pivot();
                continue;
            }
            // row/col t cleared; enforce divisibility into the rest
            int bi = -1, bj = -1;
            for (int i = t + 1; i < a.rows() && bi < 0; ++i)
                for (int j = t + 1; j < a.cols(); ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            a.add_row_multiple(t, bi, 1);
            u.add_row_multiple(t, bi, 1);
            pi = t;
            pj = t;
            // re-find smallest pivot in the now-dirty block
            std::tie(pi, pj) = find_pivot();
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

IntMatrix hermite_column_basis(const IntMatrix& m) {
    IntMatrix a = m;
    int next = 0;  // next column to place a pivot in
    for (int r = 0; r < a.rows() && next < a.cols(); ++r) {
        // gcd columns next.. on row r
        for (;;) {
            int piv = -1;
            Int best = 0;
            for (int j = next; j < a.cols(); ++j) {
                if (a.at(r, j) == 0) continue;
                Int mag = abs(a.at(r, j));
                if (piv < 0 || mag < best) {
                    best = mag;
                    piv = j;
                }
            }
            if (piv < 0) break;
            a.swap_cols(next, piv);
            bool dirty = false;
            for (int j = next + 1; j < a.cols(); ++j) {
                if (a.at(r, j) == 0) continue;
                Int q = round_div(a.at(r, j), a.at(r, next));
                a.add_col_multiple(j, next, -q);
                if (a.at(r, j) != 0) dirty = true;
            }
            if (!dirty) break;
        }
        if (a.at(r, next) != 0) {
            if (a.at(r, next) < 0) a.negate_col(next);
            // reduce earlier columns against this pivot
            for (int j = 0; j < next; ++j) {
                Int q = floor_div(a.at(r, j), a.at(r, next));
                a.add_col_multiple(j, next, -q);
            }
            ++next;
        }
    }
    // drop zero columns
    std::vector<int> keep;
    for (int j = 0; j < a.cols(); ++j) {
        bool z = true;
        for (int i = 0; i < a.rows(); ++i)
            if (a.at(i, j) != 0) {
                z = false;
                break;
            }
        if (!z) keep.push_back(j);
    }
    return select_cols(a, keep);
}

std::vector<Int> reduce_mod_lattice(std::vector<Int> x, const IntMatrix& h) {
    for (int j = 0; j < h.cols(); ++j) {
        int p = -1;
        for (int i = 0; i < h.rows(); ++i)
            if (h.at(i, j) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        Int q = floor_div(x[p], h.at(p, j));
        if (q == 0) continue;
        for (int i = 0; i < h.rows(); ++i) x[i] -= q * h.at(i, j);
    }
    return x;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    SmithResult s = smith_normal_form(a);
    std::vector<Int> c = mat_vec(s.u, b);
    const int n = std::min(a.rows(), a.cols());
    std::vector<Int> y(a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        Int di = (i < n) ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % di != 0) return std::nullopt;
            y[i] = c[i] / di;
        }
    }
    return mat_vec(s.v, y);
}

IntMatrix integer_kernel(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    const int n = std::min(a.rows(), a.cols());
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (s.d.at(i, i) != 0) ++rank;
    std::vector<int> cols;
    for (int j = rank; j < a.cols(); ++j) cols.push_back(j);
    return select_cols(s.v, cols);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    // rational Gauss-Jordan; entries of the inverse are integers since det = +-1
    const int n = u.rows();
    assert(u.cols() == n);
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(u.at(i, j));
        w[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (w[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) fail(Errc::Internal, "matrix not invertible");
        std::swap(w[c], w[p]);
        Rat pv = w[c][c];
        for (int j = 0; j < 2 * n; ++j) w[c][j] /= pv;
        for (int i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (int j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
        }
    }
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& q = w[i][n + j];
            if (denominator(q) != 1) fail(Errc::Internal, "inverse not integral");
            inv.at(i, j) = numerator(q);
        }
    return inv;
}

namespace {

// Row echelon over Q on a rational working copy; returns pivot columns.
std::vector<int> echelon(std::vector<std::vector<Rat>>& w) {
    std::vector<int> pivots;
    if (w.empty()) return pivots;
    int rows = int(w.size()), cols = int(w[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (w[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[r], w[p]);
        Rat pv = w[r][c];
        for (int j = c; j < cols; ++j) w[r][j] /= pv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (int j = c; j < cols; ++j) w[i][j] -= f * w[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank_rational(const IntMatrix& a) {
    std::vector<std::vector<Rat>> w(a.rows(), std::vector<Rat>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) w[i][j] = Rat(a.at(i, j));
    return int(echelon(w).size());
}

Int determinant(const IntMatrix& m) {
    const int n = m.rows();
    assert(m.cols() == n);
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Rat>& b) {
    int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][cols] = b[i];
    }
    std::vector<int> pivots = echelon(w);
    for (int c : pivots)
        if (c == cols) return std::nullopt;  // inconsistent
    // also catch rows with zero coefficients but nonzero rhs below last pivot
    for (int i = int(pivots.size()); i < rows; ++i)
        if (w[i][cols] != 0) return std::nullopt;
    std::vector<Rat> x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = w[r][cols];
    return x;
}

std::optional<std::vector<Rat>> solve_rational_independent(const IntMatrix& a, const std::vector<Rat>& b) {
    auto x = solve_rational(a, b);
    return x;
}

}  // namespace hyperchow
