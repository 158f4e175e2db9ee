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

#include "bipencil/golden.hpp"

#include "bipencil/verify.hpp"

#include <sstream>

namespace bipencil {

bool GoldenReport::pass() const {
    for(const auto& c : checks)
        if(!c.pass) return false;
    return !checks.empty();
}

const GoldenCheck* GoldenReport::find(const std::string& name) const {
    for(const auto& c : checks)
        if(c.name == name) return &c;
    return nullptr;
}

nlohmann::json GoldenReport::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for(const auto& c : checks) cs.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    return {{"status", pass() ? "pass" : "fail"}, {"checks", cs}, {"data", data}};
}

namespace {

// "c1*(term1) + c2*(term2) + ...", zero coefficients skipped.
std::string weighted_sum(const std::vector<std::pair<Rational, std::string>>& parts) {
    std::ostringstream os;
    bool first = true;
    for(const auto& [c, term] : parts) {
        if(c == 0) continue;
        if(!first) os << " + ";
        first = false;
        Rational mag = c < 0 ? Rational(-c) : c;
        os << (c < 0 ? "-" : "") << mag.get_str() << "*(" << term << ")";
    }
    return first ? "0" : os.str();
}

} // namespace

GoldenReport golden_sl2_example(std::size_t sites, const std::vector<Rational>& weights, const Element& z0) {
    GoldenReport report;
    if(z0.size() != 3) throw std::invalid_argument("golden: z0 must have three components");
    GaudinSystem sys = sl2_canonical(sites, weights);
    const auto& names = sys.names;
    const std::size_t N = sites;
    auto P = [](std::size_t j) { return "p" + std::to_string(j + 1); };
    auto Q = [](std::size_t j) { return "q" + std::to_string(j + 1); };

    report.data["sites"]   = N;
    report.data["weights"] = vector_to_json(weights);
    report.data["z0"]      = vector_to_json(z0);

    // (i) moment map at several directions, against the closed form.
    {
        std::vector<PencilDirection> ts = {{Rational(1), Rational(0)}, {Rational(3), Rational(1, 2)},
                                           {Rational(-7, 3), Rational(5)}};
        bool ok = true;
        std::string detail;
        nlohmann::json texts = nlohmann::json::object();
        for(const auto& t : ts) {
            if(sys.pencil.is_exceptional(t)) continue;
            std::vector<std::pair<Rational, std::string>> z1, z2, z3;
            for(std::size_t j = 0; j < N; ++j) {
                Rational inv = 1 / (t.t1 + weights[j] * t.t2);
                z1.emplace_back(-inv, P(j) + "*" + Q(j));
                z2.emplace_back(Rational(-1, 2) * inv, Q(j) + "^2");
                z3.emplace_back(Rational(1, 2) * inv, P(j) + "^2");
            }
            std::vector<Poly> expected = {parse_poly(weighted_sum(z1), names), parse_poly(weighted_sum(z2), names),
                                          parse_poly(weighted_sum(z3), names)};
            auto mu = moment_map(sys, t);
            for(std::size_t k = 0; k < 3; ++k)
                if(!(mu[k] == expected[k])) {
                    ok = false;
                    detail += "component z" + std::to_string(k + 1) + " differs at t=" + t.str() + "; ";
                }
            nlohmann::json comps = nlohmann::json::array();
            for(const auto& c : mu) comps.push_back(to_string(c, names));
            texts[t.str()] = comps;
        }
        report.data["moment_map"] = texts;
        report.checks.push_back({"moment_map", ok, ok ? "matches closed form" : detail});
    }

    // (ii) first-order pole coefficients against the closed form.
    const Poly& f = sys.casimirs.generators.at(0);
    std::vector<Poly> first_order;
    {
        bool ok = true;
        std::string detail;
        nlohmann::json texts = nlohmann::json::array();
        for(std::size_t j = 0; j < N; ++j) {
            std::vector<std::pair<Rational, std::string>> parts;
            for(std::size_t k = 0; k < N; ++k) {
                if(k == j) continue;
                parts.emplace_back(1 / (weights[k] - weights[j]),
                                   "(" + P(k) + "*" + Q(j) + " - " + P(j) + "*" + Q(k) + ")^2");
            }
            std::string text = weighted_sum(parts);
            Poly expected    = parse_poly(text, names);
            auto ex          = pole_expand(f, sys.site_maps, sys.weights, weights[j], laurent_order_bound(f, N));
            Poly got         = ex.at(-1);
            first_order.push_back(got);
            texts.push_back(to_string(got, names));
            if(!(got == expected)) {
                ok = false;
                detail += "pole a_" + std::to_string(j + 1) + " differs; ";
            }
            if(!ex.at(-2).is_zero()) {
                ok = false;
                detail += "nonzero second-order coefficient at a_" + std::to_string(j + 1) + "; ";
            }
        }
        report.data["first_order_coefficients"] = texts;
        report.checks.push_back({"pole_coefficients", ok, ok ? "sum_{k!=j}(p_k q_j - p_j q_k)^2/(a_k - a_j)" : detail});
    }

    // (iii) the single linear relation.
    {
        Poly sum(sys.ambient_dim);
        for(const auto& F : first_order) sum += F;
        LinearSpan span;
        for(const auto& F : first_order) span.insert(F);
        bool ok = sum.is_zero() && span.dimension() + 1 == N;
        report.checks.push_back({"single_relation", ok,
                                 "sum = " + to_string(sum, names) + ", span dimension " +
                                     std::to_string(span.dimension())});
    }

    // (iv) completion by the shift member. With the moment map above, the
    // pullback of the lambda^1 coefficient 2g for the shift (z1, -z2, z3)
    // is -2 (z1 sum p q + z2 sum p^2 + z3 sum q^2).
    {
        Element shift = {z0[0], -z0[1], z0[2]};
        PencilDirection t0(Rational(1), Rational(0));
        IntegralFamily G = family_G(sys, t0, shift);

        std::vector<std::pair<Rational, std::string>> parts;
        for(std::size_t j = 0; j < N; ++j) {
            parts.emplace_back(z0[0], P(j) + "*" + Q(j));
            parts.emplace_back(z0[1], P(j) + "^2");
            parts.emplace_back(z0[2], Q(j) + "^2");
        }
        Poly expected = parse_poly(weighted_sum(parts), names);

        const FamilyMember* shift_member = nullptr;
        for(const auto& m : G.members)
            if(m.provenance.source == Source::translation && m.provenance.order == 1) shift_member = &m;

        LinearSpan span;
        for(const auto& m : G.members) span.insert(m.poly);
        bool proportional = shift_member && shift_member->poly == Rational(-2) * expected;
        bool in_span      = span.contains(expected);

        Certificate inv = involutivity(sys.pencil.eta1, G, names);
        Sampler sampler;
        Vector x         = random_generic_point(sys, sampler);
        std::size_t ind  = independence(G, orbit_tangent(sys, x), x);
        std::size_t need = completeness_count(sys, x);

        bool ok = proportional && in_span && inv.pass && ind == need && G.size() == N;
        std::ostringstream detail;
        detail << "members " << G.size() << ", independent " << ind << " of " << need
               << (proportional ? ", shift member = -2*closed form" : ", shift member mismatch")
               << (inv.pass ? ", involutive" : ", NOT involutive");
        report.checks.push_back({"completed_family", ok, detail.str()});

        nlohmann::json texts = nlohmann::json::array();
        for(const auto& m : G.members) texts.push_back(to_string(m.poly, names));
        report.data["completed_family"] = texts;
        report.data["shift_member_closed_form"] = to_string(expected, names);
    }

    // Pencil facts: compatibility and the rank profile.
    {
        auto comp = compatibility(sys.pencil.eta1, sys.pencil.eta2);
        Sampler sampler(7);
        Vector x = random_generic_point(sys, sampler);
        std::vector<PencilDirection> ts = {{Rational(1), Rational(0)}};
        for(const auto& e : sys.pencil.exceptional) ts.push_back(e);
        RankProfile profile = rank_profile(sys.pencil, x, ts);
        bool ok = comp.pass && profile.ranks.front().second == 2 * N;
        for(std::size_t j = 1; j < profile.ranks.size(); ++j) ok = ok && profile.ranks[j].second == 2 * N - 2;
        report.checks.push_back({"pencil", ok, "compatible, rank 2N off E and 2N-2 on each exceptional line"});
    }

    // Stabilizers of vectors under the standard sl2 action are 1-dimensional
    // and abelian, so of rank 1 = rank sl2.
    {
        Sampler sampler(11);
        bool ok = true;
        for(int s = 0; s < 3; ++s) {
            Vector v = {sampler.nonzero_rational(), sampler.nonzero_rational()};
            auto stab = representation_stabilizer(sys.algebra, v);
            ok        = ok && stab.size() == 1 && algebra_rank(sys.algebra, stab, sampler) == 1;
        }
        ok = ok && algebra_rank(sys.algebra) == 1;
        report.checks.push_back({"stabilizer_ranks", ok, "rank of vector stabilizers equals rank sl2 = 1"});
    }
    return report;
}

} // namespace bipencil
