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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every numbered criterion passes; supplementary lines are informative.

#include "bipencil/flow.hpp"
#include "bipencil/golden.hpp"
#include "bipencil/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace bipencil;

namespace {

// Pinned tolerances and sample counts.
constexpr double kFlowDriftTolerance   = 1e-6;
constexpr double kFlowConvergenceRatio = 10.0;
constexpr double kFlowDt               = 1e-3;
constexpr std::size_t kFlowSteps       = 10000;
constexpr std::size_t kGenericPoints   = 5;
constexpr std::size_t kPencilSamples   = 3;
constexpr std::size_t kRankSamples     = 5;
constexpr std::size_t kRandomBivectors = 20;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if(!ok) {
            if(!pass) detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

struct Criterion {
    std::string id;
    std::string title;
    double target_seconds;  // 0: no runtime target
    bool supplementary;
    std::function<void(Outcome&)> body;
};

std::vector<Rational> weights(std::size_t n) {
    std::vector<Rational> w;
    for(std::size_t j = 0; j < n; ++j) w.emplace_back(static_cast<long>(j));
    return w;
}

GaudinSystem coadjoint(const std::string& name, std::size_t sites) {
    return build_system(default_spec(catalog_algebra(name), sites));
}

std::string names_of(const GaudinSystem& sys) {
    return sys.kind == ModelKind::canonical_sl2 ? "R^" + std::to_string(sys.ambient_dim)
                                                : sys.algebra.name() + "^" + std::to_string(sys.sites());
}

// ---------------------------------------------------------------------------

void golden_example(Outcome& out) {
    const std::size_t N = 3;
    const Element z0{Rational(3, 2), -2, Rational(5, 7)};
    GoldenReport report = golden_sl2_example(N, weights(N), Element{z0[0], -z0[1], z0[2]});
    for(const auto& c : report.checks) out.require(c.pass, c.name + ": " + c.detail);

    // Independent restatement of the closed forms.
    GaudinSystem sys = sl2_canonical(N, weights(N));
    const auto& n    = sys.names;
    for(const PencilDirection& t : {PencilDirection(1, 0), PencilDirection(5, 2), PencilDirection(-1, 3)}) {
        auto mu = moment_map(sys, t);
        Poly z1(6), z2(6), z3(6);
        for(std::size_t j = 0; j < N; ++j) {
            Rational d = t.t1 + sys.weights[j] * t.t2;
            std::string p = "p" + std::to_string(j + 1), q = "q" + std::to_string(j + 1);
            z1 -= (1 / d) * parse_poly(p + "*" + q, n);
            z2 -= (Rational(1, 2) / d) * parse_poly(q + "^2", n);
            z3 += (Rational(1, 2) / d) * parse_poly(p + "^2", n);
        }
        out.require(mu[0] == z1 && mu[1] == z2 && mu[2] == z3, "moment map at t=" + t.str());
    }
    IntegralFamily F = family_F(sys);
    LinearSpan fspan;
    for(const auto& p : F.polys()) fspan.insert(p);
    Poly total(6);
    for(std::size_t j = 0; j < N; ++j) {
        Poly Fj(6);
        for(std::size_t k = 0; k < N; ++k) {
            if(k == j) continue;
            std::string pk = "p" + std::to_string(k + 1), qk = "q" + std::to_string(k + 1);
            std::string pj = "p" + std::to_string(j + 1), qj = "q" + std::to_string(j + 1);
            Fj += (1 / (sys.weights[k] - sys.weights[j])) *
                  parse_poly("(" + pk + "*" + qj + " - " + pj + "*" + qk + ")^2", n);
        }
        Poly coeff = pole_expand(sys.casimirs.generators[0], sys.site_maps, sys.weights, sys.weights[j], 0).at(-1);
        out.require(coeff == Fj, "pole coefficient " + std::to_string(j + 1) + " differs from the closed form");
        out.require(fspan.contains(Fj), "closed-form member " + std::to_string(j + 1) + " outside the family");
        total += Fj;
    }
    out.require(total.is_zero(), "sum of the first-order members is nonzero");

    Poly shift_member = z0[0] * parse_poly("p1*q1 + p2*q2 + p3*q3", n) + z0[1] * parse_poly("p1^2 + p2^2 + p3^2", n) +
                        z0[2] * parse_poly("q1^2 + q2^2 + q3^2", n);
    IntegralFamily G = family_G(sys, PencilDirection(1, 0), Element{z0[0], -z0[1], z0[2]});
    bool found       = false;
    for(const auto& m : G.members)
        if(m.provenance.source == Source::translation) found = found || m.poly == Rational(-2) * shift_member;
    out.require(found, "no translation member proportional to the z0-shift closed form");
    out.require(G.size() == N, "completed family has " + std::to_string(G.size()) + " members");
    if(out.pass) out.detail << "moment map, 3 first-order members, relation, shift member for z0=(3/2,-2,5/7)";
}

std::vector<GaudinSystem> involutivity_cases() {
    std::vector<GaudinSystem> cases;
    for(std::size_t N = 1; N <= 4; ++N) cases.push_back(sl2_canonical(N, weights(N)));
    for(std::size_t N = 1; N <= 3; ++N) cases.push_back(coadjoint("sl2", N));
    for(std::size_t N = 1; N <= 3; ++N) cases.push_back(coadjoint("so3", N));
    return cases;
}

void involutivity_literal(Outcome& out) {
    Sampler sampler(kDefaultSeed);
    std::size_t checked = 0, failed = 0;
    std::string first_failure;
    for(const auto& sys : involutivity_cases()) {
        Element a        = random_regular_element(sys.algebra, sampler);
        IntegralFamily G = family_G(sys, PencilDirection(1, 0), a);
        std::vector<PencilDirection> ts{PencilDirection(1, 0)};
        for(const auto& t : random_directions(sys.pencil, kPencilSamples, sampler)) ts.push_back(t);
        for(const auto& t : ts) {
            Certificate c = involutivity(sys.pencil.at(t), G, sys.names);
            ++checked;
            if(!c.pass) {
                ++failed;
                if(first_failure.empty())
                    first_failure = names_of(sys) + " t=" + t.str() + " pair (" +
                                    c.witness["first"].get<std::string>() + ", " +
                                    c.witness["second"].get<std::string>() + ") bracket " +
                                    c.witness["bracket"].get<std::string>().substr(0, 80);
            }
        }
    }
    out.require(failed == 0, std::to_string(failed) + " of " + std::to_string(checked) +
                                 " (system, t) checks fail; first: " + first_failure);
    if(out.pass) out.detail << checked << " exact checks";
}

void involutivity_pencil(Outcome& out) {
    Sampler sampler(kDefaultSeed + 1);
    std::size_t checked = 0;
    for(const auto& sys : involutivity_cases()) {
        Element a = random_regular_element(sys.algebra, sampler);
        IntegralFamily F = family_F(sys);
        std::vector<PencilDirection> ts{PencilDirection(1, 0)};
        for(const auto& t : random_directions(sys.pencil, kPencilSamples, sampler)) ts.push_back(t);
        for(const auto& t : ts) {
            Certificate cf = involutivity(sys.pencil.at(t), F, sys.names);
            Certificate cg = involutivity(sys.pencil.at(t), family_G(sys, t, a), sys.names);
            checked += 2;
            out.require(cf.pass, names_of(sys) + ": F not involutive at t=" + t.str());
            out.require(cg.pass, names_of(sys) + ": G(t) not involutive for eta^t at t=" + t.str());
        }
    }
    if(out.pass) out.detail << checked << " exact checks: F against eta^t, and G(t) against eta^t";
}

void jacobi_compatibility(Outcome& out) {
    std::size_t pencils = 0;
    for(const auto& name : catalog_names())
        for(std::size_t N = 1; N <= 3; ++N) {
            GaudinSystem sys = coadjoint(name, N);
            const auto& P    = sys.pencil;
            std::string tag  = name + "^" + std::to_string(N);
            out.require(schouten(P.eta1, P.eta1).is_zero(), tag + ": [eta1,eta1] != 0");
            out.require(schouten(P.eta2, P.eta2).is_zero(), tag + ": [eta2,eta2] != 0");
            out.require(schouten(P.eta1, P.eta2).is_zero(), tag + ": [eta1,eta2] != 0");
            ++pencils;
        }
    Sampler s(kDefaultSeed);
    std::size_t agree = 0;
    for(std::size_t trial = 0; trial < kRandomBivectors; ++trial) {
        std::size_t dim = 2 + trial % 5;  // 2..6
        Bivector B(dim, dim);
        for(std::size_t i = 0; i < dim; ++i)
            for(std::size_t j = i + 1; j < dim; ++j) {
                Poly e = Poly::constant(dim, s.rational(5));
                for(std::size_t k = 0; k < dim; ++k) e += s.rational(5) * Poly::variable(dim, k);
                B.set(i, j, e);
            }
        Trivector sch = schouten(B, B), jac = jacobiator_oracle(B);
        bool same     = true;
        for(std::size_t i = 0; i < dim; ++i)
            for(std::size_t j = 0; j < dim; ++j)
                for(std::size_t k = 0; k < dim; ++k)
                    same = same && sch.component(i, j, k) == kSchoutenJacobiatorFactor * jac.component(i, j, k);
        agree += same;
    }
    out.require(agree == kRandomBivectors,
                std::to_string(kRandomBivectors - agree) + " random bivectors disagree with the oracle");
    if(out.pass)
        out.detail << pencils << " pencils Poisson and compatible; Schouten = " << to_string(kSchoutenJacobiatorFactor)
                   << " x Jacobiator on " << kRandomBivectors << " random linear bivectors";
}

void rank_profile_check(Outcome& out) {
    GaudinSystem sys = coadjoint("sl2", 3);
    Sampler s(kDefaultSeed);
    for(std::size_t p = 0; p < kGenericPoints; ++p) {
        Vector x = random_generic_point(sys, s);
        auto ts  = random_directions(sys.pencil, kRankSamples, s);
        for(const auto& t : ts)
            out.require(rank_at(sys.pencil.at(t), x) == 6, "rank at t=" + t.str() + " is not 6");
        for(const auto& e : sys.pencil.exceptional)
            out.require(rank_at(sys.pencil.at(e), x) == 4, "rank at e=" + e.str() + " is not 4");
    }
    if(out.pass) out.detail << kGenericPoints << " points: rank 6 at " << kRankSamples << " t, rank 4 at (a_j,-1)";
}

void admissibility_kronecker(Outcome& out) {
    struct Case {
        const char* algebra;
        std::size_t sites;
    };
    std::size_t certs = 0;
    for(const Case& c : {Case{"sl2", 2}, Case{"sl2", 3}, Case{"so3", 2}, Case{"so3", 3}, Case{"sl3", 2}}) {
        GaudinSystem sys = coadjoint(c.algebra, c.sites);
        Sampler s(kDefaultSeed);
        std::size_t rank_g = algebra_rank(sys.algebra);
        std::string tag    = std::string(c.algebra) + "^" + std::to_string(c.sites);
        for(std::size_t p = 0; p < kGenericPoints; ++p) {
            Vector x      = random_generic_point(sys, s);
            Certificate a = admissibility(sys, x, s);
            out.require(a.pass, tag + ": admissibility fails: " + a.note);
            Certificate k = kronecker_certificate(sys, x, random_directions(sys.pencil, kPencilSamples, s), s);
            out.require(k.pass, tag + ": kronecker certificate fails: " + k.note);
            if(k.pass)
                for(const auto& row : k.witness["directions"])
                    out.require(row["predicted_corank"] == rank_g && row["reduced_corank"] == rank_g,
                                tag + ": corank differs from rank at t=" + row["t"].get<std::string>());
            certs += 2;
        }
    }
    if(out.pass) out.detail << certs << " certificates; reduced corank = rank g at every direction";
}

void independence_check(Outcome& out) {
    Sampler s(kDefaultSeed);
    std::ostringstream counts;
    auto check = [&](const GaudinSystem& sys, std::size_t expected) {
        Element a        = random_regular_element(sys.algebra, s);
        IntegralFamily G = family_G(sys, PencilDirection(1, 0), a);
        for(std::size_t p = 0; p < kGenericPoints; ++p) {
            Vector x         = random_generic_point(sys, s);
            std::size_t ind  = independence(G, orbit_tangent(sys, x), x);
            std::size_t need = completeness_count(sys, x);
            out.require(ind == need && need == expected, names_of(sys) + ": independent " + std::to_string(ind) +
                                                             ", count " + std::to_string(need) + ", expected " +
                                                             std::to_string(expected));
        }
        counts << ' ' << names_of(sys) << ':' << expected;
    };
    for(std::size_t N = 1; N <= 4; ++N) check(sl2_canonical(N, weights(N)), N);
    for(std::size_t N = 1; N <= 3; ++N) check(coadjoint("sl2", N), N);
    if(out.pass) out.detail << "independent = count at " << kGenericPoints << " points each;" << counts.str();
}

void flow_conservation(Outcome& out) {
    GaudinSystem sys = coadjoint("sl2", 3);
    Sampler s(kDefaultSeed);
    Element a        = random_regular_element(sys.algebra, s);
    IntegralFamily G = family_G(sys, PencilDirection(1, 0), a);
    const FamilyMember* H = nullptr;
    for(const auto& m : G.members)
        if(m.provenance.source == Source::pole && m.provenance.order == -1) {
            H = &m;
            break;
        }
    if(!H) {
        out.require(false, "no first-order pole member");
        return;
    }
    std::vector<Poly> monitored = G.polys();
    const Poly& cas             = sys.casimirs.generators[0];
    for(std::size_t j = 0; j < sys.sites(); ++j)
        monitored.push_back(compose(cas, sys.site_maps[j], sys.ambient_dim));
    for(const auto& t : random_directions(sys.pencil, kPencilSamples, s)) monitored.push_back(pullback(sys, t, cas));

    std::vector<double> x0 = flow_start(sys, s);
    auto drift             = conservation_report(integrate(sys.pencil.eta1, H->poly, x0, kFlowDt, kFlowSteps), monitored);
    auto half = conservation_report(integrate(sys.pencil.eta1, H->poly, x0, kFlowDt / 2, 2 * kFlowSteps), monitored);
    double worst      = *std::max_element(drift.begin(), drift.end());
    double worst_half = *std::max_element(half.begin(), half.end());
    out.require(worst < kFlowDriftTolerance, "max drift " + std::to_string(worst));
    out.require(worst / worst_half >= kFlowConvergenceRatio, "halving dt reduces drift only by " +
                                                                 std::to_string(worst / worst_half));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu functions; max drift %.2e, with dt/2 %.2e (ratio %.1f)", monitored.size(),
                  worst, worst_half, worst / worst_half);
    if(out.pass) out.detail << buf;
    else out.detail << " [" << buf << "]";
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1", "closed-form sl2 example on R^6 (exact)", 5, false, golden_example},
        {"2", "family G(1,0) involutive for eta1 and eta^t at 3 sampled t", 60, false, involutivity_literal},
        {"2*", "supplementary: F and G(t) involutive for eta^t", 60, true, involutivity_pencil},
        {"3", "Jacobi and compatibility of every pencil; Schouten vs Jacobiator", 0, false, jacobi_compatibility},
        {"4", "rank profile of the sl2 pencil, N=3", 0, false, rank_profile_check},
        {"5", "admissibility and Kronecker certificates", 0, false, admissibility_kronecker},
        {"6", "independence equals completeness count", 0, false, independence_check},
        {"7", "conservation under RK4 flow", 30, false, flow_conservation},
    };

    bool all_pass = true;
    for(const auto& c : criteria) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(out);
        } catch(const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if(c.target_seconds > 0) out.require(secs < c.target_seconds, "runtime above target");
        if(!c.supplementary) all_pass = all_pass && out.pass;
        char timing[64];
        if(c.target_seconds > 0)
            std::snprintf(timing, sizeof timing, "%.2f s (target %.0f s)", secs, c.target_seconds);
        else
            std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << " | "
                  << out.detail.str() << " | " << timing << std::endl;
    }
    std::cout << (all_pass ? "acceptance: all criteria pass" : "acceptance: some criteria fail") << std::endl;
    return all_pass ? 0 : 1;
}
