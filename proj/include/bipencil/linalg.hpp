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

#pragma once

#include "bipencil/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bipencil {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);
    static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& x);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination. Rows are scaled to
/// integers first, so intermediate entries stay integral.
std::size_t rank(const Matrix& m);

/// Basis of { x : m x = 0 }, read off the reduced row echelon form.
std::vector<Vector> null_space(const Matrix& m);

/// A linearly independent subset of `vectors` spanning the same space.
std::vector<Vector> span_basis(std::span<const Vector> vectors);

/// Basis of span(a) ∩ span(b); both sets live in the same ambient space.
std::vector<Vector> intersect(std::span<const Vector> a, std::span<const Vector> b, std::size_t ambient);

/// Coordinates c with sum_i c_i basis_i = v, or nullopt if v is outside the span.
std::optional<std::vector<Rational>> solve_in_span(std::span<const Vector> basis, const Vector& v);

} // namespace bipencil
