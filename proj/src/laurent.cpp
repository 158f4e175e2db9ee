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

#include "bipencil/laurent.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>

namespace bipencil {

namespace {

// Laurent series in s known exactly on orders (-inf, valid]; `lowest` bounds
// the order of every nonzero coefficient from below.
struct TruncatedSeries {
    std::map<int, Poly> coeffs;
    int lowest = 0;
    int valid  = INT_MAX / 4;

    TruncatedSeries times(const TruncatedSeries& other, std::size_t nvars) const {
        TruncatedSeries out;
        out.lowest = lowest + other.lowest;
        out.valid  = std::min(valid + other.lowest, other.valid + lowest);
        for(const auto& [ka, pa] : coeffs) {
            for(const auto& [kb, pb] : other.coeffs) {
                int k = ka + kb;
                if(k > out.valid) break;
                auto [it, inserted] = out.coeffs.try_emplace(k, Poly(nvars));
                it->second += pa * pb;
            }
        }
        std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    }
};

} // namespace

Poly LaurentExpansion::at(int order) const {
    const std::size_t nvars = coefficients.empty() ? 0 : coefficients.front().nvars();
    if(order < lowest_order || order > highest_order()) return Poly(nvars);
    return coefficients[static_cast<std::size_t>(order - lowest_order)];
}

Poly LaurentExpansion::principal_part_at(const Rational& value) const {
    const std::size_t nvars = coefficients.empty() ? 0 : coefficients.front().nvars();
    Poly out(nvars);
    Rational shift = value - pole;
    if(shift == 0) throw std::domain_error("principal_part_at: evaluation at the pole");
    for(int k = lowest_order; k < 0 && k <= highest_order(); ++k) {
        Rational scale = 1;
        for(int i = 0; i < -k; ++i) scale /= shift;
        out += scale * at(k);
    }
    return out;
}

LaurentExpansion pole_expand(const Poly& f,
                             std::span<const std::vector<Poly>> site_maps,
                             std::span<const Rational> poles,
                             const Rational& pole,
                             int highest_order) {
    if(site_maps.size() != poles.size()) throw std::invalid_argument("pole_expand: site/pole count mismatch");
    auto where = std::find(poles.begin(), poles.end(), pole);
    if(where == poles.end()) throw std::invalid_argument("pole_expand: pole " + to_string(pole) + " is not declared");
    const auto j = static_cast<std::size_t>(where - poles.begin());

    const std::size_t n = f.nvars();
    if(site_maps.empty()) throw std::invalid_argument("pole_expand: no sites");
    const std::size_t m = site_maps.front().empty() ? 0 : site_maps.front().front().nvars();
    for(const auto& phi : site_maps) {
        if(phi.size() != n) throw std::invalid_argument("pole_expand: site map has wrong number of components");
        for(const auto& c : phi)
            if(c.nvars() != m) throw std::invalid_argument("pole_expand: site map ring mismatch");
    }

    const int degree = std::max(f.degree(), 0);
    // Each coordinate series starts at order -1; a product of up to `degree`
    // factors stays exact through `highest_order` if factors reach this far.
    const int precision = highest_order + std::max(degree - 1, 0) + 1;

    // u_k(s) = 1/(s - (a_k - a_j)) for k != j, u_j(s) = 1/s.
    std::vector<std::map<int, Rational>> site_series(poles.size());
    for(std::size_t k = 0; k < poles.size(); ++k) {
        if(k == j) {
            site_series[k][-1] = 1;
            continue;
        }
        Rational delta = poles[k] - pole;
        Rational c     = -1 / delta;
        for(int order = 0; order <= precision; ++order) {
            site_series[k][order] = c;
            c /= delta;
        }
    }

    std::vector<TruncatedSeries> coordinate(n);
    for(std::size_t i = 0; i < n; ++i) {
        auto& series  = coordinate[i];
        series.lowest = -1;
        series.valid  = precision;
        for(std::size_t k = 0; k < poles.size(); ++k) {
            const Poly& image = site_maps[k][i];
            if(image.is_zero()) continue;
            for(const auto& [order, c] : site_series[k]) {
                auto [it, inserted] = series.coeffs.try_emplace(order, Poly(m));
                it->second += c * image;
            }
        }
        std::erase_if(series.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    }

    TruncatedSeries total;
    total.lowest = 0;
    total.valid  = INT_MAX / 4;
    std::vector<std::vector<TruncatedSeries>> powers(n);
    for(const auto& [mono, c] : f.terms()) {
        TruncatedSeries term;
        term.coeffs.emplace(0, Poly::constant(m, c));
        for(std::size_t i = 0; i < n; ++i) {
            if(mono[i] == 0) continue;
            auto& cache = powers[i];
            if(cache.empty()) cache.push_back(coordinate[i]);
            while(cache.size() < mono[i]) cache.push_back(cache.back().times(coordinate[i], m));
            term = term.times(cache[mono[i] - 1], m);
        }
        for(auto& [order, p] : term.coeffs) {
            if(order > highest_order) continue;
            auto [it, inserted] = total.coeffs.try_emplace(order, Poly(m));
            it->second += p;
        }
    }

    LaurentExpansion out;
    out.pole         = pole;
    out.lowest_order = -degree;
    for(int order = -degree; order <= highest_order; ++order) {
        auto it = total.coeffs.find(order);
        out.coefficients.push_back(it == total.coeffs.end() ? Poly(m) : it->second);
    }
    while(!out.coefficients.empty() && out.coefficients.front().is_zero() && out.lowest_order < 0) {
        out.coefficients.erase(out.coefficients.begin());
        ++out.lowest_order;
    }
    return out;
}

} // namespace bipencil
