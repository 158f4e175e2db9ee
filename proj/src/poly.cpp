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

#include "bipencil/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bipencil {

std::uint32_t total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::uint32_t{0}); }

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    auto da = total_degree(a);
    auto db = total_degree(b);
    if(da != db) return da > db;
    return b < a;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    if(index >= nvars) throw std::out_of_range("Poly::variable: index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    return monomial(std::move(m), 1);
}

Poly Poly::monomial(Monomial exps, const Rational& c) {
    Poly p(exps.size());
    p.add_term(exps, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
    if(terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

Poly Poly::homogeneous_part(std::uint32_t degree) const {
    Poly out(nvars_);
    for(const auto& [m, c] : terms_)
        if(total_degree(m) == degree) out.terms_.emplace(m, c);
    return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if(m.size() != nvars_) throw std::invalid_argument("Poly::add_term: exponent length mismatch");
    if(c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if(!inserted) {
        it->second += c;
        if(it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    if(other.nvars_ != nvars_) throw std::invalid_argument("Poly: variable-count mismatch");
    for(const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if(other.nvars_ != nvars_) throw std::invalid_argument("Poly: variable-count mismatch");
    for(const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if(c == 0) {
        terms_.clear();
        return *this;
    }
    for(auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for(auto& [m, v] : out.terms_) v = -v;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    if(a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable-count mismatch");
    Poly out(a.nvars_);
    Monomial m(a.nvars_);
    for(const auto& [ma, ca] : a.terms_) {
        for(const auto& [mb, cb] : b.terms_) {
            for(std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly pow(const Poly& p, unsigned k) {
    Poly result = Poly::constant(p.nvars(), 1);
    Poly base   = p;
    while(k > 0) {
        if(k & 1u) result = result * base;
        k >>= 1u;
        if(k > 0) base = base * base;
    }
    return result;
}

Poly partial(const Poly& p, std::size_t i) {
    if(i >= p.nvars()) throw std::out_of_range("partial: variable index out of range");
    Poly out(p.nvars());
    for(const auto& [m, c] : p.terms()) {
        if(m[i] == 0) continue;
        Monomial d = m;
        d[i] -= 1;
        out.add_term(d, c * m[i]);
    }
    return out;
}

Rational eval(const Poly& p, std::span<const Rational> point) {
    if(point.size() != p.nvars()) throw std::invalid_argument("eval: point length mismatch");
    Rational sum = 0;
    Rational term;
    Rational power;
    for(const auto& [m, c] : p.terms()) {
        term = c;
        for(std::size_t i = 0; i < m.size(); ++i) {
            if(m[i] == 0) continue;
            mpz_pow_ui(mpq_numref(power.get_mpq_t()), mpq_numref(point[i].get_mpq_t()), m[i]);
            mpz_pow_ui(mpq_denref(power.get_mpq_t()), mpq_denref(point[i].get_mpq_t()), m[i]);
            term *= power;
        }
        sum += term;
    }
    return sum;
}

double eval(const Poly& p, std::span<const double> point) {
    if(point.size() != p.nvars()) throw std::invalid_argument("eval: point length mismatch");
    double sum = 0.0;
    for(const auto& [m, c] : p.terms()) {
        double term = c.get_d();
        for(std::size_t i = 0; i < m.size(); ++i)
            for(std::uint32_t e = 0; e < m[i]; ++e) term *= point[i];
        sum += term;
    }
    return sum;
}

Vector gradient_at(const Poly& p, std::span<const Rational> point) {
    Vector g(p.nvars());
    for(std::size_t i = 0; i < p.nvars(); ++i) g[i] = eval(partial(p, i), point);
    return g;
}

Poly compose(const Poly& p, std::span<const Poly> images, std::size_t target_nvars) {
    if(images.size() != p.nvars()) throw std::invalid_argument("compose: image count mismatch");
    for(const auto& img : images)
        if(img.nvars() != target_nvars) throw std::invalid_argument("compose: image ring mismatch");

    // powers[i][e] = images[i]^e, filled lazily.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const Poly& {
        auto& cache = powers[i];
        if(cache.empty()) cache.push_back(Poly::constant(target_nvars, 1));
        while(cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Poly out(target_nvars);
    for(const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(target_nvars, c);
        for(std::size_t i = 0; i < m.size(); ++i)
            if(m[i] > 0) term = term * power_of(i, m[i]);
        out += term;
    }
    return out;
}

Poly substitute_linear(const Poly& p, const Matrix& map, std::span<const Rational> offset) {
    if(map.rows() != p.nvars() || offset.size() != p.nvars())
        throw std::invalid_argument("substitute_linear: shape mismatch");
    const std::size_t m = map.cols();
    std::vector<Poly> images;
    images.reserve(p.nvars());
    for(std::size_t i = 0; i < p.nvars(); ++i) {
        Poly img = Poly::constant(m, offset[i]);
        for(std::size_t j = 0; j < m; ++j)
            if(map(i, j) != 0) img += map(i, j) * Poly::variable(m, j);
        images.push_back(std::move(img));
    }
    return compose(p, images, m);
}

std::vector<std::string> default_names(std::size_t nvars) {
    std::vector<std::string> names;
    for(std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string to_string(const Poly& p, std::span<const std::string> names) {
    if(names.size() != p.nvars()) throw std::invalid_argument("to_string: name count mismatch");
    if(p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for(const auto& [m, c] : p.terms()) {
        bool negative = c < 0;
        Rational mag  = negative ? Rational(-c) : c;
        if(first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        bool wrote = false;
        if(mag != 1 || total_degree(m) == 0) {
            os << mag.get_str();
            wrote = true;
        }
        for(std::size_t i = 0; i < m.size(); ++i) {
            if(m[i] == 0) continue;
            if(wrote) os << '*';
            os << names[i];
            if(m[i] > 1) os << '^' << m[i];
            wrote = true;
        }
    }
    return os.str();
}

std::string to_string(const Poly& p) { return to_string(p, default_names(p.nvars())); }

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if(pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "'");
    }

    void skip_ws() {
        while(pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if(pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if(start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Poly expr() {
        Poly p = term();
        while(true) {
            if(accept('+'))
                p += term();
            else if(accept('-'))
                p -= term();
            else
                break;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while(accept('*')) p = p * factor();
        return p;
    }

    Poly factor() {
        if(accept('-')) return -factor();
        if(accept('+')) return factor();
        Poly base = primary();
        if(accept('^')) {
            Integer e = integer();
            if(!e.fits_uint_p()) fail("exponent too large");
            base = pow(base, static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        if(pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if(c == '(') {
            ++pos_;
            Poly p = expr();
            if(!accept(')')) fail("expected ')'");
            return p;
        }
        if(std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer();
            Integer den = 1;
            if(accept('/')) den = integer();
            if(den == 0) fail("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return Poly::constant(names_.size(), r);
        }
        if(std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while(pos_ < text_.size() &&
                  (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto it               = std::find(names_.begin(), names_.end(), name);
            if(it == names_.end()) fail("unknown variable '" + std::string(name) + "'");
            return Poly::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> names) { return PolyParser(text, names).parse(); }

Poly LinearSpan::reduce(Poly p) const {
    for(const auto& [pivot, b] : basis_) {
        Rational c = p.coefficient(pivot);
        if(c != 0) p -= c * b;
    }
    return p;
}

bool LinearSpan::insert(const Poly& p) {
    Poly r = reduce(p);
    if(r.is_zero()) return false;
    Monomial pivot = r.terms().begin()->first;
    r *= 1 / r.coefficient(pivot);
    basis_.emplace_back(std::move(pivot), std::move(r));
    return true;
}

bool LinearSpan::contains(const Poly& p) const { return reduce(p).is_zero(); }

Poly ParamPoly::coefficient(int order) const {
    auto it = coeffs_.find(order);
    return it == coeffs_.end() ? Poly(nvars_) : it->second;
}

void ParamPoly::add(int order, const Poly& p) {
    if(p.nvars() != nvars_) throw std::invalid_argument("ParamPoly: variable-count mismatch");
    auto [it, inserted] = coeffs_.try_emplace(order, p);
    if(!inserted) it->second += p;
    if(it->second.is_zero()) coeffs_.erase(it);
}

int ParamPoly::lowest_order() const {
    if(coeffs_.empty()) throw std::logic_error("ParamPoly: zero has no lowest order");
    return coeffs_.begin()->first;
}

int ParamPoly::highest_order() const {
    if(coeffs_.empty()) throw std::logic_error("ParamPoly: zero has no highest order");
    return coeffs_.rbegin()->first;
}

Poly ParamPoly::at(const Rational& value) const {
    Poly out(nvars_);
    for(const auto& [k, p] : coeffs_) {
        Rational scale = 1;
        if(k >= 0) {
            mpq_class base = value;
            for(int i = 0; i < k; ++i) scale *= base;
        } else {
            if(value == 0) throw std::domain_error("ParamPoly::at: negative power of zero");
            for(int i = 0; i < -k; ++i) scale /= value;
        }
        out += scale * p;
    }
    return out;
}

ParamPoly translate_expand(const Poly& f, std::span<const Rational> direction) {
    const std::size_t m = f.nvars();
    if(direction.size() != m) throw std::invalid_argument("translate_expand: direction length mismatch");
    // Work in m + 1 variables with lambda last, then split by lambda degree.
    std::vector<Poly> images;
    for(std::size_t i = 0; i < m; ++i) {
        Poly img = Poly::variable(m + 1, i);
        if(direction[i] != 0) img += direction[i] * Poly::variable(m + 1, m);
        images.push_back(std::move(img));
    }
    Poly shifted = compose(f, images, m + 1);

    std::map<int, Poly> parts;
    for(const auto& [mono, c] : shifted.terms()) {
        Monomial reduced(mono.begin(), mono.end() - 1);
        auto [it, inserted] = parts.try_emplace(static_cast<int>(mono.back()), Poly(m));
        it->second.add_term(reduced, c);
    }
    ParamPoly out(m);
    for(const auto& [k, p] : parts) out.add(k, p);
    return out;
}

} // namespace bipencil
