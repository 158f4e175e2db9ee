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

#include "bipencil/linalg.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bipencil {

/// Exponent vector; length equals the ring's variable count.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);

/// Graded lexicographic order, leading (highest) term first. Only used for
/// canonical printing; arithmetic does not depend on it.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, GrlexGreater>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t index);
    static Poly monomial(Monomial exps, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    /// Homogeneous component of the given total degree.
    Poly homogeneous_part(std::uint32_t degree) const;

    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

private:
    std::size_t nvars_;
    Terms terms_;
};

Poly pow(const Poly& p, unsigned k);

/// Exact partial derivative with respect to variable i.
Poly partial(const Poly& p, std::size_t i);

Rational eval(const Poly& p, std::span<const Rational> point);
double eval(const Poly& p, std::span<const double> point);

/// Gradient evaluated at a point.
Vector gradient_at(const Poly& p, std::span<const Rational> point);

/// Substitutes variable i of `p` by images[i]; all images share one ring.
Poly compose(const Poly& p, std::span<const Poly> images, std::size_t target_nvars);

/// Pullback along an affine map: old_i = sum_j map(i, j) new_j + offset_i.
/// `map` is (p.nvars() x m), the result lives in m variables.
Poly substitute_linear(const Poly& p, const Matrix& map, std::span<const Rational> offset);

/// Default variable names x0, x1, ...
std::vector<std::string> default_names(std::size_t nvars);

/// Canonical text: graded-lex term order, coefficients as p/q, explicit '*'
/// and '^', e.g. "x0^2 - 3/2*x0*x1 + 1".
std::string to_string(const Poly& p, std::span<const std::string> names);
std::string to_string(const Poly& p);

/// Parses sums of products of rationals, declared variables, '^' with
/// non-negative integer exponents, and parentheses. Accepts the canonical text.
Poly parse_poly(std::string_view text, std::span<const std::string> names);

/// Tracks the Q-linear span of a growing list of polynomials.
class LinearSpan {
public:
    /// Adds p if it is outside the current span; returns whether it was added.
    bool insert(const Poly& p);
    bool contains(const Poly& p) const;
    std::size_t dimension() const { return basis_.size(); }

private:
    Poly reduce(Poly p) const;

    // Each basis element has coefficient 1 at its pivot and 0 at every
    // earlier pivot.
    std::vector<std::pair<Monomial, Poly>> basis_;
};

/// Polynomial in one formal parameter (lambda or r - a) with Poly coefficients.
/// Negative exponents are allowed for finite Laurent parts.
class ParamPoly {
public:
    explicit ParamPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const std::map<int, Poly>& coefficients() const { return coeffs_; }
    Poly coefficient(int order) const;
    void add(int order, const Poly& p);
    bool is_zero() const { return coeffs_.empty(); }
    int lowest_order() const;
    int highest_order() const;

    /// Substitutes a rational value for the parameter.
    Poly at(const Rational& value) const;

private:
    std::size_t nvars_;
    std::map<int, Poly> coeffs_;
};

/// f(x + lambda * direction) expanded in powers of lambda.
ParamPoly translate_expand(const Poly& f, std::span<const Rational> direction);

} // namespace bipencil
