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

#include "bipencil/sampler.hpp"

namespace bipencil {

Rational Sampler::rational(int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    Rational r(num(engine_), den(engine_));
    r.canonicalize();
    return r;
}

Rational Sampler::nonzero_rational(int bound) {
    Rational r;
    do {
        r = rational(bound);
    } while(r == 0);
    return r;
}

Vector Sampler::vector(std::size_t n, int bound) {
    Vector v(n);
    for(auto& x : v) x = rational(bound);
    return v;
}

double Sampler::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(engine_);
}

} // namespace bipencil
