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

#include "bipencil/poly.hpp"

#include <span>
#include <vector>

namespace bipencil {

/// Coefficients of a Laurent expansion in (r - pole), from `lowest_order` up.
struct LaurentExpansion {
    Rational pole;
    int lowest_order = 0;
    std::vector<Poly> coefficients;

    int highest_order() const { return lowest_order + static_cast<int>(coefficients.size()) - 1; }
    /// Coefficient of (r - pole)^order; zero outside the computed range.
    Poly at(int order) const;
    /// Sum of the strictly negative orders evaluated at r = value.
    Poly principal_part_at(const Rational& value) const;
};

/// Expands f(sum_j phi_j / (r - a_j)) around r = pole, where phi_j = site_maps[j]
/// is the list of images of the coordinates of f, and a_j = poles[j].
/// Returns orders -deg(f) .. highest_order; orders below the pole order of the
/// composition come out as zero polynomials and are trimmed from the front.
/// Throws std::invalid_argument if `pole` is not one of `poles`.
LaurentExpansion pole_expand(const Poly& f,
                             std::span<const std::vector<Poly>> site_maps,
                             std::span<const Rational> poles,
                             const Rational& pole,
                             int highest_order);

} // namespace bipencil
