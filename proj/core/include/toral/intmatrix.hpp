#pragma once

/// Dense integer matrices over GMP integers, sized for lattice work in a
/// handful of dimensions. Row-major storage; rows are the natural unit
/// because lattice bases are stored as row sets.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "toral/numeric.hpp"

namespace toral {

class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
    explicit IntMatrix(const std::vector<std::vector<Int>>& rows);

    static IntMatrix identity(std::size_t n);
    /// Rows of `top` followed by rows of `bottom`; column counts must agree.
    static IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Int> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Int>& values);
    void append_row(const std::vector<Int>& values);

    void swap_rows(std::size_t a, std::size_t b);
    void negate_row(std::size_t r);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_col(std::size_t c);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);

    bool is_zero_row(std::size_t r) const;
    IntMatrix transpose() const;

    bool operator==(const IntMatrix& other) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> multiply(const std::vector<Int>& v, const IntMatrix& m);

/// Determinant of a square matrix by Bareiss fraction-free elimination.
Int determinant(const IntMatrix& m);

}  // namespace toral
