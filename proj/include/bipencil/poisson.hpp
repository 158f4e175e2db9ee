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

#include "bipencil/liealg.hpp"
#include "bipencil/poly.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bipencil {

/// A direction (t1, t2) of the pencil t1*eta1 + t2*eta2, defined up to scale.
struct PencilDirection {
    Rational t1;
    Rational t2;

    PencilDirection() = default;
    PencilDirection(Rational a, Rational b);

    /// Affine parameter r = -t1/t2; requires t2 != 0.
    Rational affine() const;
    bool proportional_to(const PencilDirection& other) const;
    std::string str() const;

    friend bool operator==(const PencilDirection&, const PencilDirection&) = default;
};

/// Antisymmetric matrix of polynomials P^{ij}, stored strictly upper triangular.
class Bivector {
public:
    explicit Bivector(std::size_t dim = 0, std::size_t nvars = 0);

    std::size_t dim() const { return dim_; }
    /// Number of polynomial variables; equals dim() for bivectors on coordinate space.
    std::size_t nvars() const { return nvars_; }

    /// P^{ij}, with P^{ji} = -P^{ij} and zero diagonal.
    Poly entry(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Poly& value);

    bool is_zero() const;
    bool is_constant() const;

    Matrix evaluate(std::span<const Rational> point) const;

    friend Bivector operator+(const Bivector& a, const Bivector& b);
    friend Bivector operator*(const Rational& c, const Bivector& b);
    friend bool operator==(const Bivector&, const Bivector&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const { return i * dim_ + j; }

    std::size_t dim_;
    std::size_t nvars_;
    std::vector<Poly> upper_;
};

/// Fully antisymmetric 3-tensor of polynomials, stored for i < j < k.
class Trivector {
public:
    explicit Trivector(std::size_t dim = 0, std::size_t nvars = 0);

    std::size_t dim() const { return dim_; }
    Poly component(std::size_t i, std::size_t j, std::size_t k) const;
    void set_sorted(std::size_t i, std::size_t j, std::size_t k, Poly value);

    bool is_zero() const;
    /// First (i < j < k) with a nonzero component.
    std::optional<std::array<std::size_t, 3>> first_nonzero() const;

    friend Trivector operator*(const Rational& c, const Trivector& t);
    friend bool operator==(const Trivector&, const Trivector&) = default;

private:
    std::size_t dim_;
    std::size_t nvars_;
    std::vector<Poly> data_;
};

/// Ordered pair of compatible bivectors plus the directions where the pencil
/// is known to degenerate.
struct Pencil {
    Bivector eta1;
    Bivector eta2;
    std::vector<PencilDirection> exceptional;

    /// t1*eta1 + t2*eta2
    Bivector at(const PencilDirection& t) const;
    bool is_exceptional(const PencilDirection& t) const;
};

/// P^{ij}(z) = sum_k c^k_ij z_k on g*.
Bivector lie_poisson(const LieAlgebra& L);

/// Constant bivector with weights[j] on each (p_j, q_j) block; variables are
/// ordered p_1, q_1, ..., p_N, q_N.
Bivector canonical_weighted(std::size_t sites, std::span<const Rational> weights);

/// The constant bivector P(point), "frozen" at a point.
Bivector frozen(const Bivector& P, std::span<const Rational> point);

/// {f, g} = sum_ij P^{ij} d_i f d_j g.
Poly bracket(const Bivector& P, const Poly& f, const Poly& g);

/// [P, Q]^{ijk} = sum_l (P^{il} d_l Q^{jk} + Q^{il} d_l P^{jk}) + cyclic(ijk).
/// For P = Q this equals -2 times jacobiator_oracle(P).
Trivector schouten(const Bivector& P, const Bivector& Q);

/// Component (i,j,k) is {{x_i,x_j},x_k} + cyclic, computed through bracket().
Trivector jacobiator_oracle(const Bivector& P);

/// Global factor with schouten(P, P) == kSchoutenJacobiatorFactor * jacobiator_oracle(P).
inline const Rational kSchoutenJacobiatorFactor{-2};

struct CompatibilityReport {
    bool pass = true;
    std::optional<std::array<std::size_t, 3>> witness;
    Poly component;
};

CompatibilityReport compatibility(const Bivector& P, const Bivector& Q);

/// Exact rank of P evaluated at a rational point.
std::size_t rank_at(const Bivector& P, std::span<const Rational> point);

struct RankProfile {
    std::vector<std::pair<PencilDirection, std::size_t>> ranks;
    std::size_t max_rank = 0;
    /// Some sampled direction has full rank (rank == dim).
    bool jordan = false;
    /// All sampled ranks coincide.
    bool kronecker = false;
    /// Sampled directions that lie on a declared exceptional line, with the
    /// rank drop relative to max_rank.
    std::vector<std::pair<PencilDirection, std::size_t>> exceptional_drops;
};

RankProfile rank_profile(const Pencil& pencil, std::span<const Rational> point, std::span<const PencilDirection> ts);

/// Diagnostic only: directions on a grid of affine parameters where the rank
/// falls below the best sampled rank.
std::vector<PencilDirection> discover_rank_drops(const Pencil& pencil,
                                                 std::span<const Rational> point,
                                                 std::span<const Rational> affine_grid);

/// Component i is sum_j P^{ij} d_j H, i.e. x_i' = {x_i, H}.
std::vector<Poly> hamiltonian_field(const Bivector& P, const Poly& H);

/// {"dim": m, "entries": [{"i", "j", "poly"}]} with canonical polynomial text.
nlohmann::json bivector_to_json(const Bivector& P, std::span<const std::string> names);
Bivector bivector_from_json(const nlohmann::json& j, std::span<const std::string> names);

} // namespace bipencil
