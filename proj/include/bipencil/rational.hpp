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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bipencil {

/// Exact rational number. GMP keeps it canonical: reduced, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading sign, no decimals, q != 0).
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Parses a comma-separated list of rationals, e.g. "0,1,2" or "1/2,-3".
std::vector<Rational> parse_rational_list(std::string_view text);

} // namespace bipencil
