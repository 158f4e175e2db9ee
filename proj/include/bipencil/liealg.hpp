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
#include "bipencil/sampler.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bipencil {

/// Coordinates of an element of g (basis e_i) or of g* (dual basis z_i).
using Element = Vector;

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c^k_ij e_k. Constants are stored densely and kept
/// antisymmetric in (i, j).
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// `constants` has dim^3 entries indexed (i*dim + j)*dim + k; only the
    /// i < j part is read, the rest is filled by antisymmetry.
    LieAlgebra(std::string name, std::vector<std::string> labels, const std::vector<Rational>& constants);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim() + j) * dim() + k];
    }

    /// Copy with c^k_ij (and -c^k_ji) replaced; used to build broken inputs.
    LieAlgebra with_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value) const;

    /// Optional faithful matrix representation: realization()[i] represents e_i.
    const std::vector<Matrix>& realization() const { return realization_; }
    LieAlgebra with_realization(std::vector<Matrix> matrices) const;

    /// Basis element e_i as an Element.
    Element basis(std::size_t i) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Rational> constants_;
    std::vector<Matrix> realization_;
};

Element bracket(const LieAlgebra& L, const Element& x, const Element& y);

struct JacobiReport {
    bool pass = true;
    /// First (i, j, k, l) whose Jacobiator coefficient is nonzero.
    std::optional<std::array<std::size_t, 4>> witness;
    Rational value;
};

JacobiReport verify_jacobi(const LieAlgebra& L);

/// Matrix of ad*_xi on g*, with <ad*_xi x, y> = -<x, [xi, y]>.
Matrix coadjoint_matrix(const LieAlgebra& L, const Element& xi);

/// Matrix S with S * xi = ad*_xi x; its kernel is the stabilizer of x and its
/// column space is the tangent space of the coadjoint orbit through x.
Matrix coadjoint_orbit_map(const LieAlgebra& L, const Element& x);

/// Basis of { xi : ad*_xi x = 0 }.
std::vector<Element> stabilizer(const LieAlgebra& L, const Element& x);

/// Basis of { xi : rho(xi) v = 0 } for the catalog matrix representation.
std::vector<Element> representation_stabilizer(const LieAlgebra& L, const Vector& v);

/// True iff the span of `basis` is closed under the bracket.
bool is_subalgebra(const LieAlgebra& L, const std::vector<Element>& basis);

/// Probabilistic rank: minimal dim ker(ad_xi restricted to the subalgebra)
/// over random xi in it. `subspace` defaults to the whole algebra.
/// Throws std::domain_error if the subspace is not closed under the bracket.
std::size_t algebra_rank(const LieAlgebra& L, const std::optional<std::vector<Element>>& subspace, Sampler& sampler);
std::size_t algebra_rank(const LieAlgebra& L);

/// Maximal rank of the Lie-Poisson structure, n - rank(g).
std::size_t generic_orbit_dimension(const LieAlgebra& L);

/// sl2, so3, sl3, gl2, and abelian<d> (e.g. "abelian3").
LieAlgebra catalog_algebra(const std::string& name);
bool in_catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// JSON form: {"name", "dim", "basis": [...], "brackets": [{"i","j","coeffs":{"k":"p/q"}}]}.
/// Throws std::invalid_argument on malformed input.
LieAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const LieAlgebra& L);

/// Catalog name or path to a JSON file.
LieAlgebra load_algebra(const std::string& source);

} // namespace bipencil
