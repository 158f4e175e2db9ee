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

#include "bipencil/poisson.hpp"

#include <stdexcept>

namespace bipencil {

PencilDirection::PencilDirection(Rational a, Rational b) : t1(std::move(a)), t2(std::move(b)) {
    if(t1 == 0 && t2 == 0) throw std::invalid_argument("pencil direction (0, 0) is not allowed");
}

Rational PencilDirection::affine() const {
    if(t2 == 0) throw std::domain_error("affine parameter undefined for t2 = 0");
    return -t1 / t2;
}

bool PencilDirection::proportional_to(const PencilDirection& other) const { return t1 * other.t2 == t2 * other.t1; }

std::string PencilDirection::str() const { return "(" + to_string(t1) + "," + to_string(t2) + ")"; }

Bivector::Bivector(std::size_t dim, std::size_t nvars) : dim_(dim), nvars_(nvars), upper_(dim * dim, Poly(nvars)) {}

Poly Bivector::entry(std::size_t i, std::size_t j) const {
    if(i >= dim_ || j >= dim_) throw std::out_of_range("Bivector::entry: index out of range");
    if(i == j) return Poly(nvars_);
    return i < j ? upper_[index(i, j)] : -upper_[index(j, i)];
}

void Bivector::set(std::size_t i, std::size_t j, const Poly& value) {
    if(i >= dim_ || j >= dim_) throw std::out_of_range("Bivector::set: index out of range");
    if(value.nvars() != nvars_) throw std::invalid_argument("Bivector::set: ring mismatch");
    if(i == j) {
        if(!value.is_zero()) throw std::invalid_argument("Bivector::set: diagonal must vanish");
        return;
    }
    if(i < j)
        upper_[index(i, j)] = value;
    else
        upper_[index(j, i)] = -value;
}

bool Bivector::is_zero() const {
    for(const auto& p : upper_)
        if(!p.is_zero()) return false;
    return true;
}

bool Bivector::is_constant() const {
    for(const auto& p : upper_)
        if(!p.is_constant()) return false;
    return true;
}

Matrix Bivector::evaluate(std::span<const Rational> point) const {
    if(point.size() != nvars_) throw std::invalid_argument("Bivector::evaluate: point length mismatch");
    Matrix m(dim_, dim_);
    for(std::size_t i = 0; i < dim_; ++i)
        for(std::size_t j = i + 1; j < dim_; ++j) {
            const Poly& p = upper_[index(i, j)];
            if(p.is_zero()) continue;
            m(i, j) = eval(p, point);
            m(j, i) = -m(i, j);
        }
    return m;
}

Bivector operator+(const Bivector& a, const Bivector& b) {
    if(a.dim_ != b.dim_ || a.nvars_ != b.nvars_) throw std::invalid_argument("Bivector sum: dimension mismatch");
    Bivector out = a;
    for(std::size_t i = 0; i < out.upper_.size(); ++i) out.upper_[i] += b.upper_[i];
    return out;
}

Bivector operator*(const Rational& c, const Bivector& b) {
    Bivector out = b;
    for(auto& p : out.upper_) p *= c;
    return out;
}

Trivector::Trivector(std::size_t dim, std::size_t nvars) : dim_(dim), nvars_(nvars), data_(dim * dim * dim, Poly(nvars)) {}

Poly Trivector::component(std::size_t i, std::size_t j, std::size_t k) const {
    if(i == j || j == k || i == k) return Poly(nvars_);
    // Sort (i, j, k) tracking the permutation sign.
    int sign = 1;
    if(i > j) std::swap(i, j), sign = -sign;
    if(j > k) std::swap(j, k), sign = -sign;
    if(i > j) std::swap(i, j), sign = -sign;
    const Poly& p = data_[(i * dim_ + j) * dim_ + k];
    return sign > 0 ? p : -p;
}

void Trivector::set_sorted(std::size_t i, std::size_t j, std::size_t k, Poly value) {
    if(!(i < j && j < k && k < dim_)) throw std::out_of_range("Trivector::set_sorted: need i < j < k < dim");
    data_[(i * dim_ + j) * dim_ + k] = std::move(value);
}

bool Trivector::is_zero() const { return !first_nonzero().has_value(); }

std::optional<std::array<std::size_t, 3>> Trivector::first_nonzero() const {
    for(std::size_t i = 0; i < dim_; ++i)
        for(std::size_t j = i + 1; j < dim_; ++j)
            for(std::size_t k = j + 1; k < dim_; ++k)
                if(!data_[(i * dim_ + j) * dim_ + k].is_zero()) return std::array{i, j, k};
    return std::nullopt;
}

Trivector operator*(const Rational& c, const Trivector& t) {
    Trivector out = t;
    for(auto& p : out.data_) p *= c;
    return out;
}

Bivector Pencil::at(const PencilDirection& t) const { return t.t1 * eta1 + t.t2 * eta2; }

bool Pencil::is_exceptional(const PencilDirection& t) const {
    for(const auto& e : exceptional)
        if(e.proportional_to(t)) return true;
    return false;
}

Bivector lie_poisson(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    Bivector P(n, n);
    for(std::size_t i = 0; i < n; ++i)
        for(std::size_t j = i + 1; j < n; ++j) {
            Poly entry(n);
            for(std::size_t k = 0; k < n; ++k)
                if(L.constant(i, j, k) != 0) entry += L.constant(i, j, k) * Poly::variable(n, k);
            P.set(i, j, entry);
        }
    return P;
}

Bivector canonical_weighted(std::size_t sites, std::span<const Rational> weights) {
    if(weights.size() != sites) throw std::invalid_argument("canonical_weighted: one weight per site");
    const std::size_t m = 2 * sites;
    Bivector P(m, m);
    for(std::size_t j = 0; j < sites; ++j) P.set(2 * j, 2 * j + 1, Poly::constant(m, weights[j]));
    return P;
}

Bivector frozen(const Bivector& P, std::span<const Rational> point) {
    Matrix values = P.evaluate(point);
    Bivector out(P.dim(), P.nvars());
    for(std::size_t i = 0; i < P.dim(); ++i)
        for(std::size_t j = i + 1; j < P.dim(); ++j) out.set(i, j, Poly::constant(P.nvars(), values(i, j)));
    return out;
}

namespace {

void require_square(const Bivector& P, const char* what) {
    if(P.dim() != P.nvars()) throw std::invalid_argument(std::string(what) + ": bivector is not on coordinate space");
}

} // namespace

Poly bracket(const Bivector& P, const Poly& f, const Poly& g) {
    require_square(P, "bracket");
    if(f.nvars() != P.nvars() || g.nvars() != P.nvars()) throw std::invalid_argument("bracket: dimension mismatch");
    const std::size_t m = P.dim();
    std::vector<Poly> df, dg;
    for(std::size_t i = 0; i < m; ++i) {
        df.push_back(partial(f, i));
        dg.push_back(partial(g, i));
    }
    Poly out(m);
    for(std::size_t i = 0; i < m; ++i) {
        if(df[i].is_zero()) continue;
        for(std::size_t j = 0; j < m; ++j) {
            if(i == j || dg[j].is_zero()) continue;
            Poly pij = P.entry(i, j);
            if(pij.is_zero()) continue;
            out += pij * df[i] * dg[j];
        }
    }
    return out;
}

Trivector schouten(const Bivector& P, const Bivector& Q) {
    require_square(P, "schouten");
    if(P.dim() != Q.dim() || P.nvars() != Q.nvars()) throw std::invalid_argument("schouten: dimension mismatch");
    const std::size_t m = P.dim();

    // dP[l][a*m+b] = d_l P^{ab}
    auto derivatives = [m](const Bivector& B) {
        std::vector<std::vector<Poly>> d(m, std::vector<Poly>(m * m, Poly(m)));
        for(std::size_t a = 0; a < m; ++a)
            for(std::size_t b = 0; b < m; ++b) {
                Poly e = B.entry(a, b);
                if(e.is_zero()) continue;
                for(std::size_t l = 0; l < m; ++l) d[l][a * m + b] = partial(e, l);
            }
        return d;
    };
    auto dP = derivatives(P);
    auto dQ = derivatives(Q);

    auto cyclic_term = [&](std::size_t i, std::size_t j, std::size_t k) {
        Poly s(m);
        for(std::size_t l = 0; l < m; ++l) {
            const Poly& dq = dQ[l][j * m + k];
            const Poly& dp = dP[l][j * m + k];
            if(!dq.is_zero()) {
                Poly pil = P.entry(i, l);
                if(!pil.is_zero()) s += pil * dq;
            }
            if(!dp.is_zero()) {
                Poly qil = Q.entry(i, l);
                if(!qil.is_zero()) s += qil * dp;
            }
        }
        return s;
    };

    Trivector out(m, m);
    for(std::size_t i = 0; i < m; ++i)
        for(std::size_t j = i + 1; j < m; ++j)
            for(std::size_t k = j + 1; k < m; ++k)
                out.set_sorted(i, j, k, cyclic_term(i, j, k) + cyclic_term(j, k, i) + cyclic_term(k, i, j));
    return out;
}

Trivector jacobiator_oracle(const Bivector& P) {
    require_square(P, "jacobiator_oracle");
    const std::size_t m = P.dim();
    std::vector<Poly> x;
    for(std::size_t i = 0; i < m; ++i) x.push_back(Poly::variable(m, i));
    auto bb = [&](std::size_t i, std::size_t j, std::size_t k) { return bracket(P, bracket(P, x[i], x[j]), x[k]); };

    Trivector out(m, m);
    for(std::size_t i = 0; i < m; ++i)
        for(std::size_t j = i + 1; j < m; ++j)
            for(std::size_t k = j + 1; k < m; ++k) out.set_sorted(i, j, k, bb(i, j, k) + bb(j, k, i) + bb(k, i, j));
    return out;
}

CompatibilityReport compatibility(const Bivector& P, const Bivector& Q) {
    Trivector s = schouten(P, Q);
    CompatibilityReport report;
    if(auto w = s.first_nonzero()) {
        report.pass      = false;
        report.witness   = w;
        report.component = s.component((*w)[0], (*w)[1], (*w)[2]);
    }
    return report;
}

std::size_t rank_at(const Bivector& P, std::span<const Rational> point) { return rank(P.evaluate(point)); }

namespace {

Matrix combine(const PencilDirection& t, const Matrix& a, const Matrix& b) {
    Matrix m(a.rows(), a.cols());
    for(std::size_t i = 0; i < a.rows(); ++i)
        for(std::size_t j = 0; j < a.cols(); ++j) m(i, j) = t.t1 * a(i, j) + t.t2 * b(i, j);
    return m;
}

} // namespace

RankProfile rank_profile(const Pencil& pencil, std::span<const Rational> point, std::span<const PencilDirection> ts) {
    if(ts.empty()) throw std::invalid_argument("rank_profile: no pencil directions given");
    Matrix a = pencil.eta1.evaluate(point);
    Matrix b = pencil.eta2.evaluate(point);
    RankProfile profile;
    for(const auto& t : ts) {
        std::size_t r = rank(combine(t, a, b));
        profile.ranks.emplace_back(t, r);
        profile.max_rank = std::max(profile.max_rank, r);
        if(r == pencil.eta1.dim()) profile.jordan = true;
    }
    profile.kronecker = true;
    for(const auto& [t, r] : profile.ranks) {
        if(r != profile.ranks.front().second) profile.kronecker = false;
        if(pencil.is_exceptional(t)) profile.exceptional_drops.emplace_back(t, profile.max_rank - r);
    }
    return profile;
}

std::vector<PencilDirection> discover_rank_drops(const Pencil& pencil,
                                                 std::span<const Rational> point,
                                                 std::span<const Rational> affine_grid) {
    std::vector<PencilDirection> ts;
    for(const auto& r : affine_grid) ts.emplace_back(r, Rational(-1));
    ts.emplace_back(Rational(1), Rational(0));
    RankProfile profile = rank_profile(pencil, point, ts);
    std::vector<PencilDirection> drops;
    for(const auto& [t, r] : profile.ranks)
        if(r < profile.max_rank) drops.push_back(t);
    return drops;
}

std::vector<Poly> hamiltonian_field(const Bivector& P, const Poly& H) {
    require_square(P, "hamiltonian_field");
    if(H.nvars() != P.nvars()) throw std::invalid_argument("hamiltonian_field: dimension mismatch");
    const std::size_t m = P.dim();
    std::vector<Poly> dH;
    for(std::size_t j = 0; j < m; ++j) dH.push_back(partial(H, j));
    std::vector<Poly> field(m, Poly(m));
    for(std::size_t i = 0; i < m; ++i)
        for(std::size_t j = 0; j < m; ++j) {
            if(i == j || dH[j].is_zero()) continue;
            Poly pij = P.entry(i, j);
            if(!pij.is_zero()) field[i] += pij * dH[j];
        }
    return field;
}

nlohmann::json bivector_to_json(const Bivector& P, std::span<const std::string> names) {
    nlohmann::json entries = nlohmann::json::array();
    for(std::size_t i = 0; i < P.dim(); ++i)
        for(std::size_t j = i + 1; j < P.dim(); ++j) {
            Poly e = P.entry(i, j);
            if(!e.is_zero()) entries.push_back({{"i", i}, {"j", j}, {"poly", to_string(e, names)}});
        }
    return {{"dim", P.dim()}, {"entries", entries}};
}

Bivector bivector_from_json(const nlohmann::json& j, std::span<const std::string> names) {
    try {
        auto dim = j.at("dim").get<std::size_t>();
        if(names.size() != dim) throw std::invalid_argument("bivector JSON: name count does not match dim");
        Bivector P(dim, dim);
        for(const auto& e : j.at("entries")) {
            auto a = e.at("i").get<std::size_t>();
            auto b = e.at("j").get<std::size_t>();
            if(a >= dim || b >= dim || a >= b) throw std::invalid_argument("bivector JSON: need i < j < dim");
            P.set(a, b, parse_poly(e.at("poly").get<std::string>(), names));
        }
        return P;
    } catch(const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed bivector JSON: ") + e.what());
    }
}

} // namespace bipencil
