/*
   Copyright 2026 The seifert-forms Authors

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

#pragma once

#include <seifert/errors.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace seifert {

using Integer = mpz_class;

/*
 * Dense row-major matrix over a commutative ring T. Only the operations that
 * make sense for any ring live here; integer-specific algorithms are in
 * linalg.hpp and Laurent-specific ones in laurent.hpp.
 */
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged initializer");
            for (long v : r) data_.emplace_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = T(1);
        return I;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
        Matrix M(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != M.cols_) throw DimensionError("ragged rows");
            for (std::size_t j = 0; j < M.cols_; ++j) M(i, j) = rows[i][j];
        }
        return M;
    }

    // columns given as vectors, each of the same length
    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows_if_empty = 0) {
        Matrix M(cols.empty() ? rows_if_empty : cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != M.rows_) throw DimensionError("columns of unequal length");
            for (std::size_t i = 0; i < M.rows_; ++i) M(i, j) = cols[j][i];
        }
        return M;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix R(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) R(j, i) = (*this)(i, j);
        return R;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
        Matrix R(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) R(i, j) = (*this)(r0 + i, c0 + j);
        return R;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& B) {
        if (r0 + B.rows_ > rows_ || c0 + B.cols_ > cols_) throw DimensionError("block out of range");
        for (std::size_t i = 0; i < B.rows_; ++i)
            for (std::size_t j = 0; j < B.cols_; ++j) (*this)(r0 + i, c0 + j) = B(i, j);
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    // keep the listed columns, in the listed order
    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix R(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < idx.size(); ++k) R(i, k) = (*this)(i, idx[k]);
        return R;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
    }

    const std::vector<T>& data() const noexcept { return data_; }
    std::vector<T>& data() noexcept { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix& operator+=(const Matrix& b) {
        same_shape(b);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& b) {
        same_shape(b);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& x : a.data_) x = s * x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("product of incompatible matrices");
        Matrix R(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) R(i, j) += aik * b(k, j);
            }
        return R;
    }

    template <typename F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> R(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) R(i, j) = f((*this)(i, j));
        return R;
    }

private:
    void same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    Matrix<T> R(a.rows(), a.cols() + b.cols());
    R.set_block(0, 0, a);
    R.set_block(0, a.cols(), b);
    return R;
}

template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    Matrix<T> R(a.rows() + b.rows(), a.cols());
    R.set_block(0, 0, a);
    R.set_block(a.rows(), 0, b);
    return R;
}

template <typename T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> R(a.rows() + b.rows(), a.cols() + b.cols());
    R.set_block(0, 0, a);
    R.set_block(a.rows(), a.cols(), b);
    return R;
}

using IntMatrix = Matrix<Integer>;

// "[[a,b],[c,d]]"
std::string to_string(const IntMatrix& M);
std::vector<std::vector<long>> to_int64_rows(const IntMatrix& M);

} // namespace seifert
