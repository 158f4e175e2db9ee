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

#include "bipencil/laurent.hpp"
#include "bipencil/liealg.hpp"
#include "bipencil/poisson.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bipencil {

/// Input data of the product-space construction.
struct GaudinSpec {
    LieAlgebra algebra;
    std::size_t sites = 1;
    /// Distinct weights a_1, ..., a_N.
    std::vector<Rational> weights;
    /// Optional orbit representatives x_1, ..., x_N.
    std::optional<std::vector<Element>> base_points;

    /// Throws std::invalid_argument on repeated weights or length mismatches.
    void validate() const;
};

/// Spec with the default weights 0, 1, ..., N-1.
GaudinSpec default_spec(const LieAlgebra& L, std::size_t sites);

struct CasimirSet {
    std::vector<Poly> generators;
};

/// A candidate that fails {z_i, f} = 0 for the reported coordinate.
class CasimirError : public std::invalid_argument {
public:
    CasimirError(std::size_t candidate, std::size_t coordinate, const std::string& what)
        : std::invalid_argument(what), candidate_(candidate), coordinate_(coordinate) {}
    std::size_t candidate() const { return candidate_; }
    std::size_t coordinate() const { return coordinate_; }

private:
    std::size_t candidate_;
    std::size_t coordinate_;
};

/// Certified Casimir generators of the Lie-Poisson structure. Catalog
/// algebras use invariants of the trace form (so3: z1^2+z2^2+z3^2; abelian:
/// the coordinates). Throws std::invalid_argument for other algebras.
CasimirSet casimirs(const LieAlgebra& L);
/// Certifies user-supplied candidates; throws CasimirError on the first failure.
CasimirSet casimirs(const LieAlgebra& L, std::vector<Poly> candidates);

enum class Source { pole, translation, pullback };

/// Where a family member came from.
struct Provenance {
    Source source = Source::pole;
    std::size_t casimir = 0;
    /// Pole index j (Source::pole).
    std::size_t site = 0;
    /// Laurent order in (r - a_j), or the lambda order for translations.
    int order = 0;
    /// Pencil direction for pullbacks and the t0 of translated members.
    std::optional<PencilDirection> t;
    /// Free-form tag for members read back from JSON.
    std::string note;

    std::string str() const;
};

struct FamilyMember {
    Poly poly;
    Provenance provenance;
};

struct IntegralFamily {
    std::size_t ambient_dim = 0;
    std::vector<FamilyMember> members;

    std::size_t size() const { return members.size(); }
    std::vector<Poly> polys() const;
};

enum class ModelKind {
    /// Product of N copies of g*, diagonal coadjoint action.
    coadjoint,
    /// The sl2 action on R^{2N} with coordinates (p_j, q_j).
    canonical_sl2,
};

/// A constructed pencil together with the data needed to generate its
/// integrals: the moment map is sum_j phi_j / (t1 + a_j t2) with
/// phi_j = site_maps[j].
struct GaudinSystem {
    ModelKind kind = ModelKind::coadjoint;
    LieAlgebra algebra;
    std::vector<Rational> weights;
    std::size_t ambient_dim = 0;
    std::vector<std::string> names;
    std::vector<std::vector<Poly>> site_maps;
    Pencil pencil;
    CasimirSet casimirs;
    std::optional<std::vector<Element>> base_points;

    std::size_t sites() const { return weights.size(); }
};

GaudinSystem build_system(const GaudinSpec& spec);
/// eta1 = sum of the site Lie-Poisson blocks, eta2 = the blocks scaled by a_j,
/// exceptional directions (a_j, -1).
Pencil build_pencil(const GaudinSpec& spec);

/// eta1 = canonical unit weights, eta2 = canonical with the given weights, and
/// the sl2 moment map z1 = -sum p_j q_j, z2 = -1/2 sum q_j^2, z3 = 1/2 sum p_j^2
/// scaled by 1/(t1 + a_j t2). Throws on repeated weights.
GaudinSystem sl2_canonical(std::size_t sites, const std::vector<Rational>& weights);

/// Components of mu_t. Throws std::domain_error when t is exceptional.
std::vector<Poly> moment_map(const GaudinSystem& system, const PencilDirection& t);

/// f composed with mu_t.
Poly pullback(const GaudinSystem& system, const PencilDirection& t, const Poly& f);

/// Highest Laurent order kept per pole: deg(f) * (N - 1).
int laurent_order_bound(const Poly& f, std::size_t sites);

/// All Laurent coefficients of f(mu_r) at every pole, for every Casimir,
/// keeping only members outside the Q-span of those already collected.
IntegralFamily family_F(const GaudinSystem& system);

/// Cross-check mode: raw pullbacks mu_t^* f at the given directions.
IntegralFamily family_F_sampled(const GaudinSystem& system, const std::vector<PencilDirection>& ts);

/// All lambda-coefficients of f(x + lambda a), constants dropped.
/// Throws std::invalid_argument if a is not regular.
IntegralFamily at_family(const LieAlgebra& L, const CasimirSet& cas, const Element& a);
IntegralFamily at_family(const LieAlgebra& L, const Element& a);

/// family_F plus the pullback along mu_t0 of at_family(a), deduplicated.
IntegralFamily family_G(const GaudinSystem& system, const PencilDirection& t0, const Element& a);

nlohmann::json family_to_json(const IntegralFamily& fam, const std::vector<std::string>& names);
/// Reads the "members" list back; provenance tags are kept as text only.
IntegralFamily family_from_json(const nlohmann::json& j, const std::vector<std::string>& names);

/// Splits an ambient point of (g*)^N into its sites, and back.
std::vector<Element> split_sites(const Vector& point, std::size_t sites);
Vector join_sites(const std::vector<Element>& sites);

} // namespace bipencil
