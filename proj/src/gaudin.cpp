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

#include "bipencil/gaudin.hpp"

#include <algorithm>
#include <set>

namespace bipencil {

void GaudinSpec::validate() const {
    if(sites == 0) throw std::invalid_argument("number of sites must be positive");
    if(weights.size() != sites) throw std::invalid_argument("expected one weight per site");
    for(std::size_t i = 0; i < weights.size(); ++i)
        for(std::size_t j = i + 1; j < weights.size(); ++j)
            if(weights[i] == weights[j])
                throw std::invalid_argument("weights must be distinct (a_" + std::to_string(i + 1) + " = a_" +
                                            std::to_string(j + 1) + " = " + to_string(weights[i]) + ")");
    if(base_points) {
        if(base_points->size() != sites) throw std::invalid_argument("expected one base point per site");
        for(const auto& x : *base_points)
            if(x.size() != algebra.dim()) throw std::invalid_argument("base point has wrong dimension");
    }
}

GaudinSpec default_spec(const LieAlgebra& L, std::size_t sites) {
    GaudinSpec spec;
    spec.algebra = L;
    spec.sites   = sites;
    for(std::size_t j = 0; j < sites; ++j) spec.weights.emplace_back(static_cast<long>(j));
    return spec;
}

namespace {

// Scales p to integer coefficients with gcd 1 and a positive leading term.
Poly normalize(Poly p) {
    if(p.is_zero()) return p;
    Integer den = 1;
    Integer num = 0;
    for(const auto& [m, c] : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    if(p.terms().begin()->second < 0) scale = -scale;
    return scale * p;
}

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t nvars) {
    const std::size_t d = a.size();
    PolyMatrix c(d, std::vector<Poly>(d, Poly(nvars)));
    for(std::size_t i = 0; i < d; ++i)
        for(std::size_t k = 0; k < d; ++k) {
            if(a[i][k].is_zero()) continue;
            for(std::size_t j = 0; j < d; ++j)
                if(!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// tr(X(z)^p), p = 1..max_power, with X(z) = sum_k z_k B^k and B^k the
// trace-form dual of the realization basis.
std::vector<Poly> trace_invariants(const LieAlgebra& L, const std::vector<unsigned>& powers) {
    const auto& rep     = L.realization();
    const std::size_t n = L.dim();
    const std::size_t d = rep.front().rows();
    Matrix gram(n, n);
    for(std::size_t k = 0; k < n; ++k)
        for(std::size_t l = 0; l < n; ++l) {
            Matrix prod = rep[k] * rep[l];
            for(std::size_t i = 0; i < d; ++i) gram(k, l) += prod(i, i);
        }
    // Columns of the inverse Gram matrix give the dual basis coefficients.
    std::vector<Vector> inverse_columns;
    for(std::size_t k = 0; k < n; ++k) {
        Vector e(n);
        e[k]        = 1;
        std::vector<Vector> cols;
        for(std::size_t c = 0; c < n; ++c) cols.push_back(gram.column(c));
        auto solved = solve_in_span(cols, e);
        if(!solved) throw std::logic_error("trace form is degenerate for " + L.name());
        inverse_columns.push_back(*solved);
    }

    PolyMatrix X(d, std::vector<Poly>(d, Poly(n)));
    for(std::size_t k = 0; k < n; ++k) {
        Poly zk = Poly::variable(n, k);
        for(std::size_t l = 0; l < n; ++l) {
            const Rational& g = inverse_columns[k][l];
            if(g == 0) continue;
            for(std::size_t i = 0; i < d; ++i)
                for(std::size_t j = 0; j < d; ++j)
                    if(rep[l](i, j) != 0) X[i][j] += (g * rep[l](i, j)) * zk;
        }
    }

    std::vector<Poly> out;
    unsigned top = *std::max_element(powers.begin(), powers.end());
    PolyMatrix power = X;
    for(unsigned p = 1; p <= top; ++p) {
        if(p > 1) power = multiply(power, X, n);
        if(std::find(powers.begin(), powers.end(), p) == powers.end()) continue;
        Poly tr(n);
        for(std::size_t i = 0; i < d; ++i) tr += power[i][i];
        out.push_back(normalize(tr));
    }
    return out;
}

std::vector<Poly> catalog_casimir_candidates(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    const std::string& name = L.name();
    if(name == "so3" && n == 3) {
        Poly f(3);
        for(std::size_t i = 0; i < 3; ++i) f += pow(Poly::variable(3, i), 2);
        return {f};
    }
    if(name == "sl2" && !L.realization().empty()) return trace_invariants(L, {2});
    if(name == "sl3" && !L.realization().empty()) return trace_invariants(L, {2, 3});
    if(name == "gl2" && !L.realization().empty()) return trace_invariants(L, {1, 2});
    if(name.rfind("abelian", 0) == 0) {
        std::vector<Poly> coords;
        for(std::size_t i = 0; i < n; ++i) coords.push_back(Poly::variable(n, i));
        return coords;
    }
    throw std::invalid_argument("no Casimir catalog entry for '" + name + "'; supply candidates");
}

} // namespace

CasimirSet casimirs(const LieAlgebra& L, std::vector<Poly> candidates) {
    Bivector P          = lie_poisson(L);
    const std::size_t n = L.dim();
    for(std::size_t c = 0; c < candidates.size(); ++c) {
        if(candidates[c].nvars() != n) throw std::invalid_argument("Casimir candidate has wrong variable count");
        for(std::size_t i = 0; i < n; ++i)
            if(!bracket(P, Poly::variable(n, i), candidates[c]).is_zero())
                throw CasimirError(c, i,
                                   "candidate " + std::to_string(c) + " does not commute with coordinate " +
                                       L.labels()[i]);
    }
    return CasimirSet{std::move(candidates)};
}

CasimirSet casimirs(const LieAlgebra& L) { return casimirs(L, catalog_casimir_candidates(L)); }

std::string Provenance::str() const {
    if(!note.empty()) return note;
    switch(source) {
    case Source::pole:
        return "pole a_" + std::to_string(site + 1) + " order " + std::to_string(order) + " casimir " +
               std::to_string(casimir);
    case Source::translation:
        return "translation lambda^" + std::to_string(order) + " casimir " + std::to_string(casimir) +
               (t ? " pulled back at t=" + t->str() : std::string{});
    case Source::pullback:
        return "pullback casimir " + std::to_string(casimir) + (t ? " at t=" + t->str() : std::string{});
    }
    return {};
}

std::vector<Poly> IntegralFamily::polys() const {
    std::vector<Poly> out;
    for(const auto& m : members) out.push_back(m.poly);
    return out;
}

GaudinSystem build_system(const GaudinSpec& spec) {
    spec.validate();
    const LieAlgebra& L = spec.algebra;
    const std::size_t n = L.dim();
    const std::size_t N = spec.sites;
    const std::size_t m = n * N;

    GaudinSystem sys;
    sys.kind        = ModelKind::coadjoint;
    sys.algebra     = L;
    sys.weights     = spec.weights;
    sys.ambient_dim = m;
    sys.base_points = spec.base_points;
    for(std::size_t j = 0; j < N; ++j)
        for(std::size_t k = 0; k < n; ++k) sys.names.push_back(L.labels()[k] + "_" + std::to_string(j + 1));

    Bivector site = lie_poisson(L);
    Bivector eta1(m, m), eta2(m, m);
    for(std::size_t j = 0; j < N; ++j) {
        std::vector<Poly> images;
        for(std::size_t k = 0; k < n; ++k) images.push_back(Poly::variable(m, j * n + k));
        for(std::size_t a = 0; a < n; ++a)
            for(std::size_t b = a + 1; b < n; ++b) {
                Poly e = site.entry(a, b);
                if(e.is_zero()) continue;
                Poly lifted = compose(e, images, m);
                eta1.set(j * n + a, j * n + b, lifted);
                eta2.set(j * n + a, j * n + b, spec.weights[j] * lifted);
            }
        sys.site_maps.push_back(std::move(images));
        sys.pencil.exceptional.emplace_back(spec.weights[j], Rational(-1));
    }
    sys.pencil.eta1 = std::move(eta1);
    sys.pencil.eta2 = std::move(eta2);
    sys.casimirs    = casimirs(L);
    return sys;
}

Pencil build_pencil(const GaudinSpec& spec) { return build_system(spec).pencil; }

GaudinSystem sl2_canonical(std::size_t sites, const std::vector<Rational>& weights) {
    GaudinSpec spec;
    spec.algebra = catalog_algebra("sl2");
    spec.sites   = sites;
    spec.weights = weights;
    spec.validate();

    const std::size_t m = 2 * sites;
    GaudinSystem sys;
    sys.kind        = ModelKind::canonical_sl2;
    sys.algebra     = spec.algebra;
    sys.weights     = weights;
    sys.ambient_dim = m;
    for(std::size_t j = 0; j < sites; ++j) {
        sys.names.push_back("p" + std::to_string(j + 1));
        sys.names.push_back("q" + std::to_string(j + 1));
        Poly p = Poly::variable(m, 2 * j);
        Poly q = Poly::variable(m, 2 * j + 1);
        sys.site_maps.push_back({Rational(-1) * p * q, Rational(-1, 2) * q * q, Rational(1, 2) * p * p});
        sys.pencil.exceptional.emplace_back(weights[j], Rational(-1));
    }
    std::vector<Rational> ones(sites, Rational(1));
    sys.pencil.eta1 = canonical_weighted(sites, ones);
    sys.pencil.eta2 = canonical_weighted(sites, weights);
    sys.casimirs    = casimirs(sys.algebra);
    return sys;
}

std::vector<Poly> moment_map(const GaudinSystem& system, const PencilDirection& t) {
    const std::size_t n = system.algebra.dim();
    std::vector<Poly> mu(n, Poly(system.ambient_dim));
    for(std::size_t j = 0; j < system.sites(); ++j) {
        Rational denom = t.t1 + system.weights[j] * t.t2;
        if(denom == 0)
            throw std::domain_error("moment map undefined: t=" + t.str() + " lies on the exceptional line of a_" +
                                    std::to_string(j + 1));
        Rational scale = 1 / denom;
        for(std::size_t k = 0; k < n; ++k) mu[k] += scale * system.site_maps[j][k];
    }
    return mu;
}

Poly pullback(const GaudinSystem& system, const PencilDirection& t, const Poly& f) {
    return compose(f, moment_map(system, t), system.ambient_dim);
}

int laurent_order_bound(const Poly& f, std::size_t sites) {
    return std::max(f.degree(), 0) * static_cast<int>(sites > 0 ? sites - 1 : 0);
}

namespace {

bool admit(IntegralFamily& fam, LinearSpan& span, const Poly& p, Provenance prov) {
    if(p.is_constant()) return false;
    if(!span.insert(p)) return false;
    fam.members.push_back({p, std::move(prov)});
    return true;
}

void add_pole_coefficients(const GaudinSystem& system, IntegralFamily& fam, LinearSpan& span) {
    const auto& gens = system.casimirs.generators;
    for(std::size_t c = 0; c < gens.size(); ++c) {
        int bound = laurent_order_bound(gens[c], system.sites());
        for(std::size_t j = 0; j < system.sites(); ++j) {
            LaurentExpansion ex = pole_expand(gens[c], system.site_maps, system.weights, system.weights[j], bound);
            for(int order = ex.lowest_order; order <= ex.highest_order(); ++order) {
                Provenance prov;
                prov.source  = Source::pole;
                prov.casimir = c;
                prov.site    = j;
                prov.order   = order;
                admit(fam, span, ex.at(order), prov);
            }
        }
    }
}

} // namespace

IntegralFamily family_F(const GaudinSystem& system) {
    IntegralFamily fam;
    fam.ambient_dim = system.ambient_dim;
    LinearSpan span;
    add_pole_coefficients(system, fam, span);
    return fam;
}

IntegralFamily family_F_sampled(const GaudinSystem& system, const std::vector<PencilDirection>& ts) {
    IntegralFamily fam;
    fam.ambient_dim = system.ambient_dim;
    LinearSpan span;
    const auto& gens = system.casimirs.generators;
    for(const auto& t : ts)
        for(std::size_t c = 0; c < gens.size(); ++c) {
            Provenance prov;
            prov.source  = Source::pullback;
            prov.casimir = c;
            prov.t       = t;
            admit(fam, span, pullback(system, t, gens[c]), prov);
        }
    return fam;
}

IntegralFamily at_family(const LieAlgebra& L, const CasimirSet& cas, const Element& a) {
    if(a.size() != L.dim()) throw std::invalid_argument("at_family: shift has wrong dimension");
    std::size_t r       = rank_at(lie_poisson(L), a);
    std::size_t generic = generic_orbit_dimension(L);
    if(r < generic)
        throw std::invalid_argument("at_family: shift is not regular (Lie-Poisson rank " + std::to_string(r) +
                                    " < generic " + std::to_string(generic) + ")");
    IntegralFamily fam;
    fam.ambient_dim = L.dim();
    LinearSpan span;
    for(std::size_t c = 0; c < cas.generators.size(); ++c) {
        ParamPoly expansion = translate_expand(cas.generators[c], a);
        for(const auto& [order, coeff] : expansion.coefficients()) {
            Provenance prov;
            prov.source  = Source::translation;
            prov.casimir = c;
            prov.order   = order;
            admit(fam, span, coeff, prov);
        }
    }
    return fam;
}

IntegralFamily at_family(const LieAlgebra& L, const Element& a) { return at_family(L, casimirs(L), a); }

IntegralFamily family_G(const GaudinSystem& system, const PencilDirection& t0, const Element& a) {
    if(system.pencil.is_exceptional(t0)) throw std::domain_error("family_G: t0=" + t0.str() + " is exceptional");
    IntegralFamily shifted = at_family(system.algebra, system.casimirs, a);
    std::vector<Poly> mu   = moment_map(system, t0);

    IntegralFamily fam;
    fam.ambient_dim = system.ambient_dim;
    LinearSpan span;
    add_pole_coefficients(system, fam, span);
    for(const auto& member : shifted.members) {
        Provenance prov = member.provenance;
        prov.t          = t0;
        admit(fam, span, compose(member.poly, mu, system.ambient_dim), prov);
    }
    return fam;
}

nlohmann::json family_to_json(const IntegralFamily& fam, const std::vector<std::string>& names) {
    nlohmann::json members = nlohmann::json::array();
    for(const auto& m : fam.members)
        members.push_back({{"poly", to_string(m.poly, names)}, {"provenance", m.provenance.str()}});
    return {{"ambient_dim", fam.ambient_dim}, {"variables", names}, {"members", members}};
}

IntegralFamily family_from_json(const nlohmann::json& j, const std::vector<std::string>& names) {
    try {
        IntegralFamily fam;
        fam.ambient_dim = names.size();
        if(j.contains("ambient_dim") && j.at("ambient_dim").get<std::size_t>() != names.size())
            throw std::invalid_argument("family JSON: ambient dimension does not match");
        for(const auto& m : j.at("members")) {
            Provenance prov;
            prov.note = m.value("provenance", std::string("loaded"));
            fam.members.push_back({parse_poly(m.at("poly").get<std::string>(), names), prov});
        }
        return fam;
    } catch(const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed family JSON: ") + e.what());
    }
}

std::vector<Element> split_sites(const Vector& point, std::size_t sites) {
    if(sites == 0 || point.size() % sites != 0) throw std::invalid_argument("split_sites: length not divisible");
    const std::size_t n = point.size() / sites;
    std::vector<Element> out;
    for(std::size_t j = 0; j < sites; ++j)
        out.emplace_back(point.begin() + static_cast<std::ptrdiff_t>(j * n),
                         point.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
    return out;
}

Vector join_sites(const std::vector<Element>& sites) {
    Vector out;
    for(const auto& x : sites) out.insert(out.end(), x.begin(), x.end());
    return out;
}

} // namespace bipencil
