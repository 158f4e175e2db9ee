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

#include "bipencil/liealg.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace bipencil {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, const std::vector<Rational>& constants)
    : name_(std::move(name)), labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    if(n == 0) throw std::invalid_argument("LieAlgebra: dimension must be positive");
    if(constants.size() != n * n * n) throw std::invalid_argument("LieAlgebra: expected dim^3 structure constants");
    constants_.assign(n * n * n, Rational(0));
    for(std::size_t i = 0; i < n; ++i)
        for(std::size_t j = i + 1; j < n; ++j)
            for(std::size_t k = 0; k < n; ++k) {
                const Rational& c              = constants[(i * n + j) * n + k];
                constants_[(i * n + j) * n + k] = c;
                constants_[(j * n + i) * n + k] = -c;
            }
}

LieAlgebra LieAlgebra::with_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value) const {
    const std::size_t n = dim();
    if(i >= n || j >= n || k >= n || i == j) throw std::out_of_range("with_constant: bad index");
    LieAlgebra out                     = *this;
    out.constants_[(i * n + j) * n + k] = value;
    out.constants_[(j * n + i) * n + k] = -value;
    return out;
}

LieAlgebra LieAlgebra::with_realization(std::vector<Matrix> matrices) const {
    if(matrices.size() != dim()) throw std::invalid_argument("with_realization: one matrix per basis element");
    LieAlgebra out   = *this;
    out.realization_ = std::move(matrices);
    return out;
}

Element LieAlgebra::basis(std::size_t i) const {
    Element e(dim());
    e.at(i) = 1;
    return e;
}

Element bracket(const LieAlgebra& L, const Element& x, const Element& y) {
    const std::size_t n = L.dim();
    if(x.size() != n || y.size() != n) throw std::invalid_argument("bracket: dimension mismatch");
    Element out(n);
    for(std::size_t i = 0; i < n; ++i) {
        if(x[i] == 0) continue;
        for(std::size_t j = 0; j < n; ++j) {
            if(y[j] == 0 || i == j) continue;
            Rational xy = x[i] * y[j];
            for(std::size_t k = 0; k < n; ++k)
                if(L.constant(i, j, k) != 0) out[k] += xy * L.constant(i, j, k);
        }
    }
    return out;
}

JacobiReport verify_jacobi(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    JacobiReport report;
    for(std::size_t i = 0; i < n; ++i)
        for(std::size_t j = 0; j < n; ++j)
            for(std::size_t k = 0; k < n; ++k)
                for(std::size_t l = 0; l < n; ++l) {
                    Rational s = 0;
                    for(std::size_t m = 0; m < n; ++m) {
                        s += L.constant(i, j, m) * L.constant(m, k, l);
                        s += L.constant(j, k, m) * L.constant(m, i, l);
                        s += L.constant(k, i, m) * L.constant(m, j, l);
                    }
                    if(s != 0) {
                        report.pass    = false;
                        report.witness = std::array{i, j, k, l};
                        report.value   = s;
                        return report;
                    }
                }
    return report;
}

Matrix coadjoint_matrix(const LieAlgebra& L, const Element& xi) {
    const std::size_t n = L.dim();
    if(xi.size() != n) throw std::invalid_argument("coadjoint_matrix: dimension mismatch");
    // (ad*_xi x)_k = -sum_{i,j} xi_i c^j_ik x_j
    Matrix m(n, n);
    for(std::size_t k = 0; k < n; ++k)
        for(std::size_t j = 0; j < n; ++j)
            for(std::size_t i = 0; i < n; ++i)
                if(xi[i] != 0) m(k, j) -= xi[i] * L.constant(i, k, j);
    return m;
}

Matrix coadjoint_orbit_map(const LieAlgebra& L, const Element& x) {
    const std::size_t n = L.dim();
    if(x.size() != n) throw std::invalid_argument("coadjoint_orbit_map: dimension mismatch");
    Matrix s(n, n);
    for(std::size_t k = 0; k < n; ++k)
        for(std::size_t i = 0; i < n; ++i)
            for(std::size_t j = 0; j < n; ++j)
                if(x[j] != 0) s(k, i) -= L.constant(i, k, j) * x[j];
    return s;
}

std::vector<Element> stabilizer(const LieAlgebra& L, const Element& x) { return null_space(coadjoint_orbit_map(L, x)); }

std::vector<Element> representation_stabilizer(const LieAlgebra& L, const Vector& v) {
    const auto& rep = L.realization();
    if(rep.empty()) throw std::invalid_argument("representation_stabilizer: algebra has no matrix realization");
    const std::size_t d = rep.front().rows();
    if(v.size() != d) throw std::invalid_argument("representation_stabilizer: vector length mismatch");
    Matrix a(d, L.dim());
    for(std::size_t i = 0; i < L.dim(); ++i) {
        Vector col = rep[i] * v;
        for(std::size_t r = 0; r < d; ++r) a(r, i) = col[r];
    }
    return null_space(a);
}

bool is_subalgebra(const LieAlgebra& L, const std::vector<Element>& basis) {
    for(std::size_t a = 0; a < basis.size(); ++a)
        for(std::size_t b = a + 1; b < basis.size(); ++b)
            if(!solve_in_span(basis, bracket(L, basis[a], basis[b]))) return false;
    return true;
}

namespace {

// dim ker(ad_xi) on span(basis), xi a random combination of the basis.
std::size_t sampled_kernel_dimension(const LieAlgebra& L, const std::vector<Element>& basis, Sampler& sampler) {
    const std::size_t k = basis.size();
    Element xi(L.dim());
    for(const auto& b : basis) {
        Rational r = sampler.rational();
        for(std::size_t i = 0; i < xi.size(); ++i) xi[i] += r * b[i];
    }
    Matrix ad(k, k);
    for(std::size_t col = 0; col < k; ++col) {
        auto coords = solve_in_span(basis, bracket(L, xi, basis[col]));
        if(!coords) throw std::domain_error("algebra_rank: subspace is not a subalgebra");
        for(std::size_t row = 0; row < k; ++row) ad(row, col) = (*coords)[row];
    }
    return k - rank(ad);
}

} // namespace

std::size_t algebra_rank(const LieAlgebra& L, const std::optional<std::vector<Element>>& subspace, Sampler& sampler) {
    std::vector<Element> basis;
    if(subspace) {
        for(const auto& b : *subspace)
            if(b.size() != L.dim()) throw std::invalid_argument("algebra_rank: dimension mismatch");
        basis = span_basis(*subspace);
    } else {
        for(std::size_t i = 0; i < L.dim(); ++i) basis.push_back(L.basis(i));
    }
    if(basis.empty()) return 0;
    if(!is_subalgebra(L, basis)) throw std::domain_error("algebra_rank: subspace is not a subalgebra");

    // Batches of kGenericSamples; a batch that disagrees with itself triggers
    // another batch. The minimum seen is the generic value.
    std::size_t best = basis.size();
    for(int batch = 0; batch < 4; ++batch) {
        std::size_t lo = basis.size();
        std::size_t hi = 0;
        for(int s = 0; s < kGenericSamples; ++s) {
            auto d = sampled_kernel_dimension(L, basis, sampler);
            lo     = std::min(lo, d);
            hi     = std::max(hi, d);
        }
        best = std::min(best, lo);
        if(lo == hi && lo == best) break;
    }
    return best;
}

std::size_t algebra_rank(const LieAlgebra& L) {
    Sampler sampler;
    return algebra_rank(L, std::nullopt, sampler);
}

std::size_t generic_orbit_dimension(const LieAlgebra& L) { return L.dim() - algebra_rank(L); }

namespace {

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

Vector flatten(const Matrix& m) {
    Vector v;
    for(std::size_t i = 0; i < m.rows(); ++i)
        for(std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

Matrix operator*(const Rational& s, Matrix m) {
    for(std::size_t i = 0; i < m.rows(); ++i)
        for(std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
    return m;
}

// Structure constants read off a matrix basis by decomposing commutators.
LieAlgebra from_matrices(std::string name, std::vector<std::string> labels, std::vector<Matrix> basis) {
    const std::size_t n = basis.size();
    std::vector<Vector> flat;
    for(const auto& b : basis) flat.push_back(flatten(b));
    std::vector<Rational> c(n * n * n);
    for(std::size_t i = 0; i < n; ++i)
        for(std::size_t j = i + 1; j < n; ++j) {
            Matrix comm = basis[i] * basis[j] + Rational(-1) * Matrix(basis[j] * basis[i]);
            auto coords = solve_in_span(flat, flatten(comm));
            if(!coords) throw std::logic_error("from_matrices: basis is not closed under commutators");
            for(std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = (*coords)[k];
        }
    return LieAlgebra(std::move(name), std::move(labels), c).with_realization(std::move(basis));
}

LieAlgebra make_sl2() {
    Matrix h = unit(2, 0, 0) + Rational(-1) * unit(2, 1, 1);
    return from_matrices("sl2", {"h", "e", "f"}, {h, unit(2, 0, 1), unit(2, 1, 0)});
}

LieAlgebra make_so3() {
    // (L_i)_{jk} = -eps_{ijk}, so [L_1, L_2] = L_3 and cyclic.
    std::vector<Matrix> gens(3, Matrix(3, 3));
    for(std::size_t i = 0; i < 3; ++i) {
        std::size_t j  = (i + 1) % 3;
        std::size_t k  = (i + 2) % 3;
        gens[i](j, k) = -1;
        gens[i](k, j) = 1;
    }
    return from_matrices("so3", {"l1", "l2", "l3"}, gens);
}

LieAlgebra make_sl3() {
    Matrix h1 = unit(3, 0, 0) + Rational(-1) * unit(3, 1, 1);
    Matrix h2 = unit(3, 1, 1) + Rational(-1) * unit(3, 2, 2);
    return from_matrices("sl3", {"h1", "h2", "e12", "e23", "e13", "e21", "e32", "e31"},
                         {h1, h2, unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2), unit(3, 1, 0), unit(3, 2, 1),
                          unit(3, 2, 0)});
}

LieAlgebra make_gl2() {
    return from_matrices("gl2", {"e11", "e12", "e21", "e22"},
                         {unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)});
}

std::optional<std::size_t> abelian_dimension(const std::string& name) {
    const std::string prefix = "abelian";
    if(name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    std::string digits = name.substr(prefix.size());
    if(!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) return std::nullopt;
    std::size_t d = std::stoul(digits);
    if(d == 0 || d > 64) return std::nullopt;
    return d;
}

} // namespace

bool in_catalog(const std::string& name) {
    return name == "sl2" || name == "so3" || name == "sl3" || name == "gl2" || abelian_dimension(name).has_value();
}

std::vector<std::string> catalog_names() { return {"sl2", "so3", "sl3", "gl2"}; }

LieAlgebra catalog_algebra(const std::string& name) {
    if(name == "sl2") return make_sl2();
    if(name == "so3") return make_so3();
    if(name == "sl3") return make_sl3();
    if(name == "gl2") return make_gl2();
    if(auto d = abelian_dimension(name)) {
        std::vector<std::string> labels;
        for(std::size_t i = 0; i < *d; ++i) labels.push_back("a" + std::to_string(i + 1));
        return LieAlgebra(name, labels, std::vector<Rational>(*d * *d * *d));
    }
    throw std::invalid_argument("unknown catalog algebra '" + name + "'");
}

LieAlgebra algebra_from_json(const nlohmann::json& j) {
    try {
        std::string name = j.at("name").get<std::string>();
        auto dim         = j.at("dim").get<std::size_t>();
        auto labels      = j.at("basis").get<std::vector<std::string>>();
        if(dim == 0 || labels.size() != dim) throw std::invalid_argument("basis length must equal dim");
        std::vector<Rational> c(dim * dim * dim);
        for(const auto& entry : j.at("brackets")) {
            auto i = entry.at("i").get<std::size_t>();
            auto k = entry.at("j").get<std::size_t>();
            if(i >= dim || k >= dim) throw std::invalid_argument("bracket index out of range");
            if(i >= k) throw std::invalid_argument("brackets must be listed with i < j");
            for(const auto& [key, value] : entry.at("coeffs").items()) {
                std::size_t target = std::stoul(key);
                if(target >= dim) throw std::invalid_argument("coefficient index out of range");
                c[(i * dim + k) * dim + target] = parse_rational(value.get<std::string>());
            }
        }
        return LieAlgebra(name, labels, c);
    } catch(const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed Lie algebra JSON: ") + e.what());
    }
}

nlohmann::json algebra_to_json(const LieAlgebra& L) {
    nlohmann::json brackets = nlohmann::json::array();
    const std::size_t n     = L.dim();
    for(std::size_t i = 0; i < n; ++i)
        for(std::size_t j = i + 1; j < n; ++j) {
            nlohmann::json coeffs = nlohmann::json::object();
            for(std::size_t k = 0; k < n; ++k)
                if(L.constant(i, j, k) != 0) coeffs[std::to_string(k)] = to_string(L.constant(i, j, k));
            if(!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    return {{"name", L.name()}, {"dim", n}, {"basis", L.labels()}, {"brackets", brackets}};
}

LieAlgebra load_algebra(const std::string& source) {
    if(in_catalog(source)) return catalog_algebra(source);
    std::ifstream in(source);
    if(!in) throw std::invalid_argument("'" + source + "' is neither a catalog algebra nor a readable file");
    nlohmann::json j;
    try {
        in >> j;
    } catch(const nlohmann::json::exception& e) {
        throw std::invalid_argument("cannot parse '" + source + "': " + e.what());
    }
    return algebra_from_json(j);
}

} // namespace bipencil
