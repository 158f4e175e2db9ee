/*
 * Copyright 2026 The bipencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bipencil/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bipencil {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for(std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for(std::size_t j = 0; j < columns.size(); ++j) {
        if(columns[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
        for(std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for(std::size_t i = 0; i < rows.size(); ++i) {
        if(rows[i].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
        for(std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for(std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for(std::size_t i = 0; i < rows_; ++i)
        for(std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for(const auto& x : data_)
        if(x != 0) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if(a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for(std::size_t i = 0; i < a.rows_; ++i)
        for(std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if(aik == 0) continue;
            for(std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if(a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix c = a;
    for(std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if(a.cols_ != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vector y(a.rows_);
    for(std::size_t i = 0; i < a.rows_; ++i)
        for(std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
}

std::size_t rank(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for(std::size_t i = 0; i < rows; ++i) {
        Integer lcm = 1;
        for(std::size_t j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        for(std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }

    // Bareiss: every division below is exact.
    std::size_t r = 0;
    Integer prev  = 1;
    for(std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while(pivot < rows && a[pivot][c] == 0) ++pivot;
        if(pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        for(std::size_t i = r + 1; i < rows; ++i) {
            for(std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for(std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while(p < a.rows() && a(p, c) == 0) ++p;
        if(p == a.rows()) continue;
        if(p != r)
            for(std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for(std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for(std::size_t i = 0; i < a.rows(); ++i) {
            if(i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for(std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<Vector> null_space(const Matrix& m) {
    Matrix a    = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for(auto c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for(std::size_t free = 0; free < m.cols(); ++free) {
        if(is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for(std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> span_basis(std::span<const Vector> vectors) {
    if(vectors.empty()) return {};
    const std::size_t n = vectors.front().size();
    Matrix a            = Matrix::from_columns(vectors, n);
    auto pivots         = rref(a);
    std::vector<Vector> out;
    for(auto c : pivots) out.push_back(vectors[c]);
    return out;
}

std::vector<Vector> intersect(std::span<const Vector> a, std::span<const Vector> b, std::size_t ambient) {
    if(a.empty() || b.empty()) return {};
    auto ba = span_basis(a);
    auto bb = span_basis(b);
    // [A | -B] (x; y) = 0  =>  A x lies in both spans.
    Matrix m(ambient, ba.size() + bb.size());
    for(std::size_t j = 0; j < ba.size(); ++j)
        for(std::size_t i = 0; i < ambient; ++i) m(i, j) = ba[j][i];
    for(std::size_t j = 0; j < bb.size(); ++j)
        for(std::size_t i = 0; i < ambient; ++i) m(i, ba.size() + j) = -bb[j][i];
    std::vector<Vector> out;
    for(const auto& kernel : null_space(m)) {
        Vector v(ambient);
        for(std::size_t j = 0; j < ba.size(); ++j)
            for(std::size_t i = 0; i < ambient; ++i) v[i] += kernel[j] * ba[j][i];
        out.push_back(std::move(v));
    }
    return span_basis(out);
}

std::optional<std::vector<Rational>> solve_in_span(std::span<const Vector> basis, const Vector& v) {
    const std::size_t n = v.size();
    Matrix m(n, basis.size() + 1);
    for(std::size_t j = 0; j < basis.size(); ++j)
        for(std::size_t i = 0; i < n; ++i) m(i, j) = basis[j][i];
    for(std::size_t i = 0; i < n; ++i) m(i, basis.size()) = v[i];
    auto pivots = rref(m);
    if(!pivots.empty() && pivots.back() == basis.size()) return std::nullopt;
    std::vector<Rational> c(basis.size());
    for(std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = m(r, basis.size());
    return c;
}

} // namespace bipencil
