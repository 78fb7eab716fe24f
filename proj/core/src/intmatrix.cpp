#include "toral/intmatrix.hpp"

#include "toral/error.hpp"

namespace toral {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(0) {
    for (const auto& r : rows) {
        if (cols_ == 0) cols_ = r.size();
        if (r.size() != cols_ && rows_ > 0)
            throw Error(Errc::invalid_argument, "ragged matrix initializer");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows)
        for (const Int& v : r) data_.push_back(v);
}

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows) : rows_(rows.size()), cols_(0) {
    if (!rows.empty()) cols_ = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols_) throw Error(Errc::invalid_argument, "ragged matrix rows");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows)
        for (const Int& v : r) data_.push_back(v);
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::stack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols_ != bottom.cols_ && top.rows_ > 0 && bottom.rows_ > 0)
        throw Error(Errc::invalid_argument, "stack: column count mismatch");
    std::size_t cols = top.rows_ > 0 ? top.cols_ : bottom.cols_;
    IntMatrix m(top.rows_ + bottom.rows_, cols);
    for (std::size_t r = 0; r < top.rows_; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = top.at(r, c);
    for (std::size_t r = 0; r < bottom.rows_; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(top.rows_ + r, c) = bottom.at(r, c);
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    std::vector<Int> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

void IntMatrix::set_row(std::size_t r, const std::vector<Int>& values) {
    if (values.size() != cols_) throw Error(Errc::length_mismatch, "set_row: length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = values[c];
}

void IntMatrix::append_row(const std::vector<Int>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error(Errc::length_mismatch, "append_row: length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

bool IntMatrix::is_zero_row(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c) != 0) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error(Errc::length_mismatch, "multiply: shape mismatch");
    IntMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

std::vector<Int> multiply(const std::vector<Int>& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw Error(Errc::length_mismatch, "multiply: shape mismatch");
    std::vector<Int> out(m.cols(), Int(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m.at(k, j);
    }
    return out;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "determinant: not square");
    std::size_t n = m.rows();
    if (n == 0) return Int(1);
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return Int(0);
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = v;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

}  // namespace toral
