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

#include "bipencil/gaudin.hpp"
#include "bipencil/sampler.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace bipencil {

enum class CertificateKind { involutivity, independence, completeness, admissibility, kronecker_ranks };

std::string to_string(CertificateKind kind);

/// Outcome of one check. A failing certificate always carries a witness.
struct Certificate {
    CertificateKind kind = CertificateKind::involutivity;
    bool pass = true;
    nlohmann::json witness = nlohmann::json::object();
    std::string note;

    nlohmann::json to_json() const;
};

/// Exact pairwise brackets; fails on the first nonzero {f_i, f_j}.
Certificate involutivity(const Bivector& P, const IntegralFamily& fam, const std::vector<std::string>& names = {});

/// Tangent space at `point` of the orbit through it. For the coadjoint model
/// this is span{(ad*_xi1 x_1, ..., ad*_xiN x_N)}; for the canonical model the
/// symplectic leaf of eta1, i.e. the image of eta1(point).
std::vector<Vector> orbit_tangent(const GaudinSystem& system, const Vector& point);

/// Rank of the differentials of the family at `point`, restricted to `tangent`.
std::size_t independence(const IntegralFamily& fam, const std::vector<Vector>& tangent, const Vector& point);

/// dim O - rank(eta1 on O) / 2 at the point.
std::size_t completeness_count(const GaudinSystem& system, const Vector& point);

/// Both admissibility conditions at the point: the site stabilizers meet in
/// {0} and each has rank equal to rank(g). Coadjoint model only.
Certificate admissibility(const GaudinSystem& system, const Vector& point, Sampler& sampler);

/// Checks the hypotheses under which the reduced pencil on O/G is Kronecker:
/// admissibility, full orbit rank off the exceptional lines with the expected
/// drop on each of them, and the reduced corank measured on G-invariant
/// covectors against its prediction (rank g off E, rank g_j at e_j).
/// Throws std::invalid_argument if a sample lies on an exceptional line.
Certificate kronecker_certificate(const GaudinSystem& system,
                                  const Vector& point,
                                  const std::vector<PencilDirection>& t_samples,
                                  Sampler& sampler);

/// A point of maximal eta1 rank drawn from batches of bounded rationals.
Vector random_generic_point(const GaudinSystem& system, Sampler& sampler);

/// `count` random directions off the exceptional lines of the pencil.
std::vector<PencilDirection> random_directions(const Pencil& pencil, std::size_t count, Sampler& sampler);

/// A random regular element of g*.
Element random_regular_element(const LieAlgebra& L, Sampler& sampler);

nlohmann::json vector_to_json(const Vector& v);

} // namespace bipencil
