/*
   Copyright 2026 The rankcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RANKCODES_LINALG_HPP
#define RANKCODES_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "galois.hpp"

namespace rankcodes {

/// Dense row-major matrix over a Field (GF(q) or GF(q^m)).
class Matrix {
   public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
        return m;
    }

    static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
        Matrix m(std::move(field), 0, cols);
        for (const auto& r : rows) m.append_row(r);
        return m;
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Elem> r) {
        if (r.size() != cols_) throw error(errc::shape_mismatch, "row length does not match column count");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    /// Drops rows from index n on.
    void truncate_rows(std::size_t n) {
        if (n >= rows_) return;
        rows_ = n;
        data_.resize(rows_ * cols_);
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Matrix times column vector.
    std::vector<Elem> apply(std::span<const Elem> x) const {
        if (x.size() != cols_) throw error(errc::shape_mismatch, "vector length does not match column count");
        std::vector<Elem> y(rows_, field_->zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] = field_->add(y[i], field_->mul((*this)(i, j), x[j]));
        return y;
    }

    /// Row vector times matrix.
    std::vector<Elem> combine_rows(std::span<const Elem> coeffs) const {
        if (coeffs.size() != rows_) throw error(errc::shape_mismatch, "coefficient count does not match row count");
        std::vector<Elem> y(cols_, field_->zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            if (coeffs[i] == field_->zero()) continue;
            for (std::size_t j = 0; j < cols_; ++j) y[j] = field_->add(y[j], field_->mul(coeffs[i], (*this)(i, j)));
        }
        return y;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw error(errc::shape_mismatch, "inner dimensions differ");
        const auto& f = *a.field_;
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Elem x = a(i, l);
                if (x == f.zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(l, j)));
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; pivots are normalized to one, zero rows trail.
inline RrefResult rref(Matrix m) {
    const auto& f = *m.field();
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == f.zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Elem inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Elem factor = m(i, c);
            if (factor == f.zero()) continue;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

namespace detail {

/// Kernel basis read off an RREF over the first `cols` columns.
inline Matrix kernel_from_rref(const RrefResult& r, std::size_t cols) {
    const auto& field = r.reduced.field();
    const auto& f = *field;
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots)
        if (p < cols) is_pivot[p] = true;
    Matrix k(field, 0, cols);
    std::vector<Elem> v(cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (r.pivots[i] < cols) v[r.pivots[i]] = f.neg(r.reduced(i, free));
        k.append_row(v);
    }
    return k;
}

}  // namespace detail

/// Basis of the right kernel, one row per free column (in column order) with
/// that free variable set to one and the others to zero.
inline Matrix kernel_basis(const Matrix& m) { return detail::kernel_from_rref(rref(m), m.cols()); }

struct AffineSolution {
    std::vector<Elem> particular;
    Matrix kernel;
};

/// All x with A x = b as particular + span(kernel rows); nullopt if infeasible.
inline std::optional<AffineSolution> solve_affine(const Matrix& a, std::span<const Elem> b) {
    if (b.size() != a.rows()) throw error(errc::shape_mismatch, "right-hand side length does not match row count");
    const auto& f = *a.field();
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
    AffineSolution sol;
    sol.particular.assign(a.cols(), f.zero());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) sol.particular[r.pivots[i]] = r.reduced(i, a.cols());
    sol.kernel = detail::kernel_from_rref(r, a.cols());
    return sol;
}

}  // namespace rankcodes

#endif
