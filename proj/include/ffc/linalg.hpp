// Copyright 2026 The ffcirc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Dense complex matrices and the handful of operations the simulator and the
 * oracle need. Storage is row-major.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffc {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// Number of basis states of an n-qubit register.
inline std::size_t dim_of(std::size_t n) { return std::size_t{1} << n; }

/**
 * @brief Dense complex matrix, row-major.
 */
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_{rows}, cols_{cols}, data_(rows * cols) {}

    /// Square matrix from nested initializer rows.
    Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) {
                throw std::invalid_argument("Matrix: ragged initializer");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Matrix diagonal(std::span<const cplx> diag) {
        Matrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            m(i, i) = diag[i];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool square() const { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] std::span<cplx> data() { return data_; }
    [[nodiscard]] std::span<const cplx> data() const { return data_; }

    [[nodiscard]] std::span<cplx> row(std::size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::span<const cplx> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    [[nodiscard]] std::vector<cplx> column(std::size_t c) const {
        std::vector<cplx> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            out[r] = (*this)(r, c);
        }
        return out;
    }

    [[nodiscard]] Matrix adjoint() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    [[nodiscard]] cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    Matrix &operator+=(const Matrix &other) {
        check_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += other.data_[i];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &other) {
        check_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= other.data_[i];
        }
        return *this;
    }
    Matrix &operator*=(cplx s) {
        for (auto &v : data_) {
            v *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("Matrix: inner dimension mismatch");
        }
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            cplx *orow = out.data_.data() + i * out.cols_;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{0.0, 0.0}) {
                    continue;
                }
                const cplx *brow = b.data_.data() + k * b.cols_;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    orow[j] += aik * brow[j];
                }
            }
        }
        return out;
    }

    friend std::vector<cplx> operator*(const Matrix &a,
                                       std::span<const cplx> v) {
        if (a.cols_ != v.size()) {
            throw std::invalid_argument("Matrix: vector length mismatch");
        }
        std::vector<cplx> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            cplx acc = 0.0;
            const cplx *arow = a.data_.data() + i * a.cols_;
            for (std::size_t j = 0; j < a.cols_; ++j) {
                acc += arow[j] * v[j];
            }
            out[i] = acc;
        }
        return out;
    }

  private:
    void check_same_shape(const Matrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument("Matrix: shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double m = 0.0;
    auto da = a.data();
    auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        m = std::max(m, std::abs(da[i] - db[i]));
    }
    return m;
}

inline double frobenius_norm(const Matrix &a) {
    double s = 0.0;
    for (const auto &v : a.data()) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

/// Largest modulus among off-diagonal entries.
inline double max_offdiag(const Matrix &a) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                m = std::max(m, std::abs(a(r, c)));
            }
        }
    }
    return m;
}

inline double hermiticity_error(const Matrix &a) {
    if (!a.square()) {
        throw std::invalid_argument("hermiticity_error: matrix not square");
    }
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = r; c < a.cols(); ++c) {
            m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return m;
}

/// max |U†U - I|
inline double unitarity_error(const Matrix &u) {
    if (!u.square()) {
        throw std::invalid_argument("unitarity_error: matrix not square");
    }
    return max_abs_diff(u.adjoint() * u, Matrix::identity(u.rows()));
}

inline cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner: length mismatch");
    }
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

inline double norm2(std::span<const cplx> a) {
    double s = 0.0;
    for (const auto &v : a) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

inline double distance(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("distance: length mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::norm(a[i] - b[i]);
    }
    return std::sqrt(s);
}

} // namespace ffc
