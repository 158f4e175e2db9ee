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

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace bipencil {

struct GoldenCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct GoldenReport {
    std::vector<GoldenCheck> checks;
    nlohmann::json data;

    bool pass() const;
    const GoldenCheck* find(const std::string& name) const;
    nlohmann::json to_json() const;
};

/// Reproduces the sl2 example on R^{2N}: the moment map components, the
/// first-order pole coefficients sum_{k != j} (p_k q_j - p_j q_k)^2/(a_k - a_j),
/// their single relation, and the completion by the shift member
/// z1 sum p_j q_j + z2 sum p_j^2 + z3 sum q_j^2 for the given z = z0.
/// Each expected polynomial is parsed from its closed-form text, independently
/// of the construction that produces it.
GoldenReport golden_sl2_example(std::size_t sites, const std::vector<Rational>& weights, const Element& z0);

} // namespace bipencil
