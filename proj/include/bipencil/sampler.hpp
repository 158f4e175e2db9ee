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

#include "bipencil/linalg.hpp"

#include <cstdint>
#include <random>

namespace bipencil {

/// Numerator/denominator bound for sampled rationals.
inline constexpr int kSampleBound = 100;
/// Independent samples per probabilistic computation.
inline constexpr int kGenericSamples = 5;
inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// The single seeded source of randomness. Every randomized routine takes one
/// by reference so runs replay exactly from the recorded seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = kDefaultSeed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// p/q with |p| <= bound, 1 <= q <= bound.
    Rational rational(int bound = kSampleBound);
    /// Same, but never zero.
    Rational nonzero_rational(int bound = kSampleBound);
    Vector vector(std::size_t n, int bound = kSampleBound);
    double uniform(double lo, double hi);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace bipencil
