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

#include "bipencil/verify.hpp"

#include <stdexcept>

namespace bipencil {

std::string to_string(CertificateKind kind) {
    switch(kind) {
    case CertificateKind::involutivity: return "involutivity";
    case CertificateKind::independence: return "independence";
    case CertificateKind::completeness: return "completeness";
    case CertificateKind::admissibility: return "admissibility";
    case CertificateKind::kronecker_ranks: return "kronecker_ranks";
    }
    return "unknown";
}

nlohmann::json Certificate::to_json() const {
    return {{"kind", to_string(kind)}, {"status", pass ? "pass" : "fail"}, {"witness", witness}, {"note", note}};
}

nlohmann::json vector_to_json(const Vector& v) {
    nlohmann::json out = nlohmann::json::array();
    for(const auto& x : v) out.push_back(to_string(x));
    return out;
}

Certificate involutivity(const Bivector& P, const IntegralFamily& fam, const std::vector<std::string>& names) {
    if(fam.ambient_dim != P.nvars()) throw std::invalid_argument("involutivity: dimension mismatch");
    std::vector<std::string> labels = names.empty() ? default_names(P.nvars()) : names;
    Certificate cert;
    cert.kind = CertificateKind::involutivity;
    for(std::size_t i = 0; i < fam.size(); ++i)
        for(std::size_t j = i + 1; j < fam.size(); ++j) {
            Poly b = bracket(P, fam.members[i].poly, fam.members[j].poly);
            if(!b.is_zero()) {
                cert.pass    = false;
                cert.witness = {{"pair", {i, j}},
                                {"first", fam.members[i].provenance.str()},
                                {"second", fam.members[j].provenance.str()},
                                {"bracket", to_string(b, labels)}};
                return cert;
            }
        }
    cert.witness = {{"members", fam.size()}, {"pairs_checked", fam.size() * (fam.size() - (fam.size() > 0)) / 2}};
    return cert;
}

namespace {

std::vector<Vector> column_space(const Matrix& m) {
    std::vector<Vector> cols;
    for(std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return span_basis(cols);
}

void require_coadjoint(const GaudinSystem& system, const char* what) {
    if(system.kind != ModelKind::coadjoint)
        throw std::invalid_argument(std::string(what) + " is only defined for the coadjoint product model");
}

// Vectors (ad*_xi x_1, ..., ad*_xi x_N) for xi running over the basis of g.
std::vector<Vector> diagonal_action_directions(const GaudinSystem& system, const Vector& point) {
    const std::size_t n = system.algebra.dim();
    auto sites          = split_sites(point, system.sites());
    std::vector<Matrix> maps;
    for(const auto& x : sites) maps.push_back(coadjoint_orbit_map(system.algebra, x));
    std::vector<Vector> dirs;
    for(std::size_t i = 0; i < n; ++i) {
        Vector v;
        for(const auto& s : maps) {
            Vector col = s.column(i);
            v.insert(v.end(), col.begin(), col.end());
        }
        dirs.push_back(std::move(v));
    }
    return dirs;
}

} // namespace

std::vector<Vector> orbit_tangent(const GaudinSystem& system, const Vector& point) {
    if(point.size() != system.ambient_dim) throw std::invalid_argument("orbit_tangent: point length mismatch");
    if(system.kind == ModelKind::canonical_sl2) return column_space(system.pencil.eta1.evaluate(point));

    const std::size_t n = system.algebra.dim();
    auto sites          = split_sites(point, system.sites());
    std::vector<Vector> basis;
    for(std::size_t j = 0; j < sites.size(); ++j) {
        for(const auto& v : column_space(coadjoint_orbit_map(system.algebra, sites[j]))) {
            Vector lifted(system.ambient_dim);
            for(std::size_t k = 0; k < n; ++k) lifted[j * n + k] = v[k];
            basis.push_back(std::move(lifted));
        }
    }
    return basis;
}

std::size_t independence(const IntegralFamily& fam, const std::vector<Vector>& tangent, const Vector& point) {
    if(point.size() != fam.ambient_dim) throw std::invalid_argument("independence: point length mismatch");
    if(tangent.empty() || fam.members.empty()) return 0;
    Matrix d(fam.size(), fam.ambient_dim);
    for(std::size_t i = 0; i < fam.size(); ++i) {
        Vector g = gradient_at(fam.members[i].poly, point);
        for(std::size_t k = 0; k < g.size(); ++k) d(i, k) = g[k];
    }
    return rank(d * Matrix::from_columns(tangent, fam.ambient_dim));
}

std::size_t completeness_count(const GaudinSystem& system, const Vector& point) {
    auto tangent = orbit_tangent(system, point);
    Matrix eta   = system.pencil.eta1.evaluate(point);
    for(std::size_t j = 0; j < eta.cols(); ++j)
        if(!solve_in_span(tangent, eta.column(j)))
            throw std::logic_error("completeness_count: eta1 is not tangent to the orbit");
    return tangent.size() - rank(eta) / 2;
}

Certificate admissibility(const GaudinSystem& system, const Vector& point, Sampler& sampler) {
    require_coadjoint(system, "admissibility");
    const LieAlgebra& L = system.algebra;
    auto sites          = split_sites(point, system.sites());

    Certificate cert;
    cert.kind = CertificateKind::admissibility;

    std::size_t rank_g = algebra_rank(L, std::nullopt, sampler);
    nlohmann::json dims = nlohmann::json::array();
    nlohmann::json ranks = nlohmann::json::array();
    std::vector<Vector> common;
    bool condition2 = true;
    for(std::size_t j = 0; j < sites.size(); ++j) {
        auto stab = stabilizer(L, sites[j]);
        if(!is_subalgebra(L, stab))
            throw std::domain_error("admissibility: stabilizer at site " + std::to_string(j + 1) +
                                    " is not closed under the bracket; resample the point");
        std::size_t r = algebra_rank(L, stab, sampler);
        dims.push_back(stab.size());
        ranks.push_back(r);
        if(r != rank_g) condition2 = false;
        common = j == 0 ? stab : intersect(common, stab, L.dim());
    }
    bool condition1 = common.empty();

    cert.pass    = condition1 && condition2;
    cert.witness = {{"point", vector_to_json(point)},
                    {"stabilizer_dims", dims},
                    {"stabilizer_ranks", ranks},
                    {"algebra_rank", rank_g},
                    {"intersection_dim", common.size()},
                    {"discrete_intersection", condition1},
                    {"ranks_equal", condition2}};
    if(!condition1) cert.note = "site stabilizers share a nonzero subalgebra";
    else if(!condition2) cert.note = "a site stabilizer has rank different from rank g";
    return cert;
}

Certificate kronecker_certificate(const GaudinSystem& system,
                                  const Vector& point,
                                  const std::vector<PencilDirection>& t_samples,
                                  Sampler& sampler) {
    require_coadjoint(system, "kronecker_certificate");
    const Pencil& pencil = system.pencil;
    for(const auto& t : t_samples)
        if(pencil.is_exceptional(t))
            throw std::invalid_argument("kronecker_certificate: sample " + t.str() + " lies on an exceptional line");

    Certificate cert;
    cert.kind = CertificateKind::kronecker_ranks;
    cert.note = "certifies the rank hypotheses for the reduced pencil on O/G via ambient computations; "
                "the quotient itself is not constructed";

    if(pencil.eta1.is_zero() && pencil.eta2.is_zero()) {
        cert.witness = {{"degenerate", true}, {"reason", "trivial pencil is micro-Kronecker"}};
        return cert;
    }

    Certificate adm = admissibility(system, point, sampler);
    if(!adm.pass) {
        cert.pass    = false;
        cert.witness = {{"admissibility", adm.to_json()}};
        cert.note    = "admissibility fails at the point";
        return cert;
    }

    const LieAlgebra& L = system.algebra;
    const std::size_t n = L.dim();
    auto sites          = split_sites(point, system.sites());
    auto tangent        = orbit_tangent(system, point);
    const std::size_t orbit_dim = tangent.size();

    auto directions      = span_basis(diagonal_action_directions(system, point));
    // Covectors annihilating the diagonal G-directions.
    Matrix dir_rows      = Matrix::from_rows(directions, system.ambient_dim);
    auto invariant_covectors = null_space(dir_rows);
    Matrix W             = Matrix::from_columns(invariant_covectors, system.ambient_dim);
    const std::size_t reduced_dim = orbit_dim - directions.size();

    std::size_t rank_g = adm.witness.at("algebra_rank").get<std::size_t>();
    auto stab_ranks    = adm.witness.at("stabilizer_ranks");

    std::vector<PencilDirection> ts = t_samples;
    for(const auto& e : pencil.exceptional) ts.push_back(e);
    RankProfile profile = rank_profile(pencil, point, ts);
    Matrix a            = pencil.eta1.evaluate(point);
    Matrix b            = pencil.eta2.evaluate(point);

    bool ok             = directions.size() == n;
    nlohmann::json rows = nlohmann::json::array();
    for(std::size_t idx = 0; idx < ts.size(); ++idx) {
        const auto& t     = ts[idx];
        std::size_t r     = profile.ranks[idx].second;
        bool exceptional  = idx >= t_samples.size();
        std::size_t site  = exceptional ? idx - t_samples.size() : 0;
        std::size_t expected_rank = orbit_dim;
        std::size_t predicted_corank = rank_g;
        if(exceptional) {
            expected_rank    = orbit_dim - rank(coadjoint_orbit_map(L, sites[site]));
            predicted_corank = stab_ranks.at(site).get<std::size_t>();
        }
        Matrix eta(a.rows(), a.cols());
        for(std::size_t i = 0; i < a.rows(); ++i)
            for(std::size_t j = 0; j < a.cols(); ++j) eta(i, j) = t.t1 * a(i, j) + t.t2 * b(i, j);
        std::size_t reduced_rank   = rank(W.transpose() * eta * W);
        std::size_t reduced_corank = reduced_dim - reduced_rank;
        bool row_ok = r == expected_rank && reduced_corank == predicted_corank;
        ok          = ok && row_ok;
        rows.push_back({{"t", t.str()},
                        {"exceptional", exceptional},
                        {"ambient_rank", r},
                        {"expected_rank", expected_rank},
                        {"reduced_corank", reduced_corank},
                        {"predicted_corank", predicted_corank},
                        {"ok", row_ok}});
    }
    cert.pass    = ok;
    cert.witness = {{"point", vector_to_json(point)},
                    {"orbit_dim", orbit_dim},
                    {"group_orbit_dim", directions.size()},
                    {"reduced_dim", reduced_dim},
                    {"algebra_rank", rank_g},
                    {"directions", rows}};
    if(!ok) cert.note = "rank profile does not match the Kronecker prediction";
    return cert;
}

Vector random_generic_point(const GaudinSystem& system, Sampler& sampler) {
    Vector best;
    std::size_t best_rank = 0;
    for(int batch = 0; batch < 4; ++batch) {
        std::size_t lo = SIZE_MAX;
        std::size_t hi = 0;
        for(int s = 0; s < kGenericSamples; ++s) {
            Vector x      = sampler.vector(system.ambient_dim);
            std::size_t r = rank_at(system.pencil.eta1, x);
            lo            = std::min(lo, r);
            hi            = std::max(hi, r);
            if(best.empty() || r > best_rank) {
                best      = x;
                best_rank = r;
            }
        }
        if(lo == hi && hi == best_rank) break;
    }
    return best;
}

std::vector<PencilDirection> random_directions(const Pencil& pencil, std::size_t count, Sampler& sampler) {
    std::vector<PencilDirection> out;
    while(out.size() < count) {
        PencilDirection t(sampler.nonzero_rational(), sampler.nonzero_rational());
        if(pencil.is_exceptional(t)) continue;
        bool repeat = false;
        for(const auto& u : out) repeat = repeat || u.proportional_to(t);
        if(!repeat) out.push_back(t);
    }
    return out;
}

Element random_regular_element(const LieAlgebra& L, Sampler& sampler) {
    Bivector P          = lie_poisson(L);
    std::size_t generic = generic_orbit_dimension(L);
    for(int attempt = 0; attempt < 100; ++attempt) {
        Element a = sampler.vector(L.dim());
        if(rank_at(P, a) == generic) return a;
    }
    throw std::runtime_error("random_regular_element: no regular element found");
}

} // namespace bipencil
