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

#include "bipencil/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bipencil {

namespace {

bool is_integer_literal(std::string_view s) {
    if(!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if(s.empty()) return false;
    for(char c : s) {
        if(!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while(!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while(!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash         = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if(!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if(num.front() == '+') num.remove_prefix(1);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if(d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while(start <= text.size()) {
        auto comma = text.find(',', start);
        if(comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

} // namespace bipencil
