#ifndef HOPFFORGE_MATRIX_HPP
#define HOPFFORGE_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopfforge/ratfunc.hpp"

namespace hopfforge {

// ===========================================================================
// Matrix<F>: dense matrix over an exact field, row-major, 0-based indices.
// Columns are images: column j of a map matrix is the image of e_{j+1}.
// All elimination is exact; pivots are the first nonzero entry in a column.
// ===========================================================================

template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), one_(one_like(F())) {}
    Matrix(std::size_t rows, std::size_t cols, const F& zero)
        : rows_(rows), cols_(cols), one_(one_like(zero)), a_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const F& one) {
        Matrix m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_entry());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch in *");
        Matrix r(x.rows_, y.cols_, x.zero_entry());
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const F& v = x.at(i, k);
                if (is_zero(v)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    add_mul(r.at(i, j), v, y.at(k, j));
            }
        return r;
    }

    friend Matrix operator+(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in +");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend Matrix operator-(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in -");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }

    std::vector<F> operator*(const std::vector<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: shape mismatch in M*v");
        std::vector<F> r(rows_, zero_entry());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) add_mul(r[i], at(i, j), v[j]);
        return r;
    }

    F trace() const {
        F t = zero_entry();
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero_matrix() const {
        for (const F& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    // ------------------------------------------------------------------
    // elimination
    // ------------------------------------------------------------------

    // reduced row echelon form in place; returns pivot column indices
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && is_zero(at(p, col))) ++p;
            if (p == rows_) continue;
            if (p != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
            F inv = one_like(at(row, col)) / at(row, col);
            for (std::size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || is_zero(at(i, col))) continue;
                F f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix tmp = *this;
        return tmp.rref().size();
    }

    // canonical kernel basis from the RREF: one vector per free column,
    // with a 1 in the free coordinate
    std::vector<std::vector<F>> kernel_basis() const {
        Matrix tmp = *this;
        std::vector<std::size_t> pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        std::vector<std::vector<F>> basis;
        const F zero = zero_entry();
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<F> v(cols_, zero);
            v[free] = one_exemplar();
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -tmp.at(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: not square");
        Matrix aug(rows_, 2 * cols_, zero_entry());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = one_exemplar();
        }
        auto pivots = aug.rref();
        if (pivots.size() != rows_) return std::nullopt;
        if (rows_ > 0 && pivots.back() >= cols_) return std::nullopt;
        Matrix inv(rows_, cols_, zero_entry());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

    F determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix::determinant: not square");
        Matrix tmp = *this;
        F det = one_exemplar();
        bool flip = false;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t p = row;
            while (p < rows_ && is_zero(tmp.at(p, col))) ++p;
            if (p == rows_) return zero_entry();
            if (p != row) {
                for (std::size_t j = 0; j < cols_; ++j) std::swap(tmp.at(p, j), tmp.at(row, j));
                flip = !flip;
            }
            det = det * tmp.at(row, col);
            F inv = one_like(tmp.at(row, col)) / tmp.at(row, col);
            for (std::size_t i = row + 1; i < rows_; ++i) {
                if (is_zero(tmp.at(i, col))) continue;
                F f = tmp.at(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j) tmp.at(i, j) -= f * tmp.at(row, j);
            }
            ++row;
        }
        return flip ? -det : det;
    }

    // one solution of A x = b with free variables set to zero, or nullopt
    static std::optional<std::vector<F>> solve(const Matrix& A, const std::vector<F>& b) {
        if (b.size() != A.rows_) throw std::invalid_argument("Matrix::solve: shape mismatch");
        Matrix aug(A.rows_, A.cols_ + 1, A.zero_entry());
        for (std::size_t i = 0; i < A.rows_; ++i) {
            for (std::size_t j = 0; j < A.cols_; ++j) aug.at(i, j) = A.at(i, j);
            aug.at(i, A.cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == A.cols_) return std::nullopt; // inconsistent
        std::vector<F> x(A.cols_, A.zero_entry());
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols_);
        return x;
    }

private:
    F zero_entry() const { return zero_like(one_); }
    F one_exemplar() const { return one_; }

    std::size_t rows_, cols_;
    F one_;
    std::vector<F> a_;
};

using CycMatrix = Matrix<CycScalar>;
using RatMatrix = Matrix<RatFunc>;

} // namespace hopfforge

#endif
