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
#include "bipencil/poly.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace bipencil::testing {

// Reference values derived independently by tests/oracle/generate_oracle.py.
inline const nlohmann::json& oracle() {
    static const nlohmann::json data = nlohmann::json::parse(std::ifstream(BIPENCIL_ORACLE));
    return data;
}

inline Poly poly(const std::string& text, const std::vector<std::string>& names) { return parse_poly(text, names); }

inline std::vector<Rational> rationals(const nlohmann::json& list) {
    std::vector<Rational> out;
    for(const auto& v : list) out.push_back(parse_rational(v.get<std::string>()));
    return out;
}

inline std::vector<Rational> range_weights(std::size_t n) {
    std::vector<Rational> w;
    for(std::size_t j = 0; j < n; ++j) w.emplace_back(static_cast<long>(j));
    return w;
}

// True iff a and b are nonzero multiples of each other.
inline bool proportional(const Poly& a, const Poly& b) {
    if(a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [m, ca] = *a.terms().begin();
    Rational cb         = b.coefficient(m);
    if(cb == 0) return false;
    return a * cb == b * ca;
}

inline bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    LinearSpan sa, sb;
    for(const auto& p : a) sa.insert(p);
    for(const auto& p : b) sb.insert(p);
    for(const auto& p : a)
        if(!sb.contains(p)) return false;
    for(const auto& p : b)
        if(!sa.contains(p)) return false;
    return true;
}

inline GaudinSystem coadjoint_system(const std::string& algebra, std::size_t sites) {
    return build_system(default_spec(catalog_algebra(algebra), sites));
}

} // namespace bipencil::testing
