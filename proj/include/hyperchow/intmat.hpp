#pragma once

#include <optional>
#include <vector>

#include "hyperchow/numeric.hpp"

namespace hyperchow {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IntMatrix transposed() const;
    std::vector<Int> row(int i) const;
    std::vector<Int> col(int j) const;
    void set_col(int j, const std::vector<Int>& v);

    void swap_rows(int i, int k);
    void swap_cols(int j, int k);
    void add_row_multiple(int dst, int src, const Int& c);  // row dst += c * row src
    void add_col_multiple(int dst, int src, const Int& c);
    void negate_row(int i);
    void negate_col(int j);

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

// Horizontal concatenation [a | b].
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
// Selects the given rows, in order.
IntMatrix select_rows(const IntMatrix& m, const std::vector<int>& rows);
IntMatrix select_cols(const IntMatrix& m, const std::vector<int>& cols);

// Smith normal form u*m*v = d with u, v unimodular and d diagonal with
// d1 | d2 | ..., all diagonal entries >= 0. Pivots are chosen with minimal
// absolute value to limit coefficient growth.
struct SmithResult {
    IntMatrix u, d, v;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Column-style Hermite normal form of the lattice spanned by the columns.
// Zero columns are dropped; pivot rows strictly increase, pivots positive,
// entries right of a pivot in its row are reduced into [0, pivot).
IntMatrix hermite_column_basis(const IntMatrix& m);

// Reduces x modulo the lattice spanned by the columns of h (h in column HNF):
// the canonical coset representative, pivot coordinates brought into
// [0, pivot) from the first pivot row on.
std::vector<Int> reduce_mod_lattice(std::vector<Int> x, const IntMatrix& h);

// One integral solution of a x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

// Lattice basis of { x : a x = 0 }, as columns.
IntMatrix integer_kernel(const IntMatrix& a);

// Exact inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

int rank_rational(const IntMatrix& a);
Int determinant(const IntMatrix& a);  // square, fraction-free (Bareiss)

// Solves a x = b over the rationals when the columns of a are linearly
// independent; nullopt if the system is inconsistent.
std::optional<std::vector<Rat>> solve_rational_independent(const IntMatrix& a, const std::vector<Rat>& b);

// General rational solve: any solution of a x = b, nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Rat>& b);

}  // namespace hyperchow
