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

#include "bipencil/cli.hpp"

#include "bipencil/flow.hpp"
#include "bipencil/golden.hpp"
#include "bipencil/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace bipencil {

namespace {

struct RunConfig {
    std::string algebra = "sl2";
    std::size_t sites   = 3;
    std::string weights;
    std::string t0      = "1,0";
    std::string shift;
    std::uint64_t seed  = kDefaultSeed;
    std::string out;
    std::string family;
    std::size_t points  = 5;
    double dt           = 1e-3;
    std::size_t steps   = 10000;
    std::size_t stride  = 100;
    double tolerance    = 1e-6;
    int hamiltonian     = -1;
};

nlohmann::json config_json(const std::string& command, const RunConfig& c) {
    return {{"command", command}, {"algebra", c.algebra}, {"sites", c.sites},   {"weights", c.weights},
            {"t0", c.t0},         {"shift", c.shift},     {"seed", c.seed}};
}

std::vector<Rational> resolve_weights(const RunConfig& c) {
    if(c.weights.empty()) {
        std::vector<Rational> w;
        for(std::size_t j = 0; j < c.sites; ++j) w.emplace_back(static_cast<long>(j));
        return w;
    }
    return parse_rational_list(c.weights);
}

GaudinSpec make_spec(const RunConfig& c) {
    GaudinSpec spec;
    spec.algebra = load_algebra(c.algebra);
    spec.sites   = c.sites;
    spec.weights = resolve_weights(c);
    spec.validate();
    return spec;
}

PencilDirection parse_direction(const std::string& text) {
    auto v = parse_rational_list(text);
    if(v.size() != 2) throw std::invalid_argument("pencil direction needs two components, got '" + text + "'");
    return {v[0], v[1]};
}

Element resolve_shift(const RunConfig& c, const LieAlgebra& L, Sampler& sampler) {
    if(c.shift.empty()) return random_regular_element(L, sampler);
    auto a = parse_rational_list(c.shift);
    if(a.size() != L.dim()) throw std::invalid_argument("shift must have " + std::to_string(L.dim()) + " components");
    return a;
}

void emit(const nlohmann::json& j, const std::string& path, std::ostream& out) {
    if(path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if(!f) throw std::invalid_argument("cannot write '" + path + "'");
    f << j.dump(2) << '\n';
}

int cmd_algebra_check(const RunConfig& c, std::ostream& out) {
    LieAlgebra L        = load_algebra(c.algebra);
    JacobiReport report = verify_jacobi(L);
    nlohmann::json j    = {{"config", config_json("algebra check", c)},
                           {"algebra", algebra_to_json(L)},
                           {"status", report.pass ? "pass" : "fail"}};
    if(report.witness) j["witness"] = {{"indices", *report.witness}, {"value", to_string(report.value)}};
    emit(j, c.out, out);
    return report.pass ? kExitPass : kExitCertificateFailure;
}

int cmd_build(const RunConfig& c, std::ostream& out) {
    GaudinSpec spec     = make_spec(c);
    GaudinSystem sys    = build_system(spec);
    Sampler sampler(c.seed);
    PencilDirection t0  = parse_direction(c.t0);
    Element shift       = resolve_shift(c, sys.algebra, sampler);
    IntegralFamily F    = family_F(sys);
    IntegralFamily G    = family_G(sys, t0, shift);

    std::filesystem::path dir = c.out.empty() ? std::filesystem::path(".") : std::filesystem::path(c.out);
    std::filesystem::create_directories(dir);

    nlohmann::json exceptional = nlohmann::json::array();
    for(const auto& e : sys.pencil.exceptional) exceptional.push_back(e.str());
    nlohmann::json pencil = {{"config", config_json("build", c)},
                             {"variables", sys.names},
                             {"eta1", bivector_to_json(sys.pencil.eta1, sys.names)},
                             {"eta2", bivector_to_json(sys.pencil.eta2, sys.names)},
                             {"exceptional", exceptional}};
    nlohmann::json fF = family_to_json(F, sys.names);
    fF["config"]      = config_json("build", c);
    nlohmann::json fG = family_to_json(G, sys.names);
    fG["config"]      = config_json("build", c);
    fG["t0"]          = t0.str();
    fG["shift"]       = vector_to_json(shift);

    emit(pencil, (dir / "pencil.json").string(), out);
    emit(fF, (dir / "family_F.json").string(), out);
    emit(fG, (dir / "family_G.json").string(), out);
    out << nlohmann::json{{"status", "pass"},
                          {"written", {"pencil.json", "family_F.json", "family_G.json"}},
                          {"family_F_size", F.size()},
                          {"family_G_size", G.size()}}
               .dump(2)
        << '\n';
    return kExitPass;
}

int cmd_verify(const std::string& which, const RunConfig& c, std::ostream& out) {
    GaudinSpec spec    = make_spec(c);
    GaudinSystem sys   = build_system(spec);
    Sampler sampler(c.seed);
    PencilDirection t0 = parse_direction(c.t0);
    if(sys.pencil.is_exceptional(t0)) throw std::invalid_argument("t0 " + t0.str() + " is exceptional");
    Element shift      = resolve_shift(c, sys.algebra, sampler);

    std::vector<Certificate> certs;
    bool all = which == "all";

    if(all || which == "involutivity") {
        IntegralFamily G = c.family.empty() ? family_G(sys, t0, shift)
                                            : family_from_json(nlohmann::json::parse(std::ifstream(c.family)), sys.names);
        Certificate cert = involutivity(sys.pencil.at(t0), G, sys.names);
        cert.witness["bivector"] = "eta^t0, t0=" + t0.str();
        certs.push_back(cert);
        if(c.family.empty()) {
            IntegralFamily F = family_F(sys);
            for(const auto& t : random_directions(sys.pencil, 3, sampler)) {
                Certificate cf = involutivity(sys.pencil.at(t), F, sys.names);
                cf.witness["bivector"] = "eta^t, t=" + t.str() + " (family F)";
                certs.push_back(cf);
            }
        }
    }
    if(all || which == "independence") {
        IntegralFamily G = family_G(sys, t0, shift);
        for(std::size_t s = 0; s < c.points; ++s) {
            Vector x         = random_generic_point(sys, sampler);
            std::size_t ind  = independence(G, orbit_tangent(sys, x), x);
            std::size_t need = completeness_count(sys, x);
            Certificate cert;
            cert.kind    = CertificateKind::independence;
            cert.pass    = ind == need;
            cert.witness = {{"point", vector_to_json(x)}, {"independent", ind}, {"completeness_count", need}};
            certs.push_back(cert);
        }
    }
    if(all || which == "admissibility") {
        for(std::size_t s = 0; s < c.points; ++s)
            certs.push_back(admissibility(sys, random_generic_point(sys, sampler), sampler));
    }
    if(all || which == "kronecker") {
        for(std::size_t s = 0; s < c.points; ++s) {
            Vector x = random_generic_point(sys, sampler);
            auto ts  = random_directions(sys.pencil, 3, sampler);
            certs.push_back(kronecker_certificate(sys, x, ts, sampler));
        }
    }
    if(certs.empty()) throw std::invalid_argument("unknown verification '" + which + "'");

    bool pass           = true;
    nlohmann::json list = nlohmann::json::array();
    for(const auto& cert : certs) {
        pass = pass && cert.pass;
        list.push_back(cert.to_json());
    }
    emit({{"config", config_json("verify " + which, c)},
          {"shift", vector_to_json(shift)},
          {"status", pass ? "pass" : "fail"},
          {"certificates", list}},
         c.out, out);
    return pass ? kExitPass : kExitCertificateFailure;
}

int cmd_flow(const RunConfig& c, std::ostream& out) {
    if(c.steps == 0) throw std::invalid_argument("--steps must be at least 1");
    if(!(c.dt > 0.0)) throw std::invalid_argument("--dt must be positive");
    GaudinSpec spec    = make_spec(c);
    GaudinSystem sys   = build_system(spec);
    Sampler sampler(c.seed);
    PencilDirection t0 = parse_direction(c.t0);
    Element shift      = resolve_shift(c, sys.algebra, sampler);
    IntegralFamily G   = family_G(sys, t0, shift);

    std::size_t h_index = 0;
    if(c.hamiltonian >= 0) {
        h_index = static_cast<std::size_t>(c.hamiltonian);
    } else {
        // Default: the first first-order pole coefficient.
        for(std::size_t i = 0; i < G.size(); ++i)
            if(G.members[i].provenance.source == Source::pole && G.members[i].provenance.order == -1) {
                h_index = i;
                break;
            }
    }
    if(h_index >= G.size()) throw std::invalid_argument("--hamiltonian index out of range");

    std::vector<Poly> monitored = G.polys();
    std::vector<std::string> labels;
    for(std::size_t i = 0; i < G.size(); ++i) labels.push_back("F" + std::to_string(i));
    for(std::size_t c_idx = 0; c_idx < sys.casimirs.generators.size(); ++c_idx)
        for(std::size_t j = 0; j < sys.sites(); ++j) {
            std::vector<Poly> images = sys.site_maps[j];
            monitored.push_back(compose(sys.casimirs.generators[c_idx], images, sys.ambient_dim));
            labels.push_back("C" + std::to_string(c_idx) + "_site" + std::to_string(j + 1));
        }

    std::vector<double> x0 = flow_start(sys, sampler);
    Trajectory traj = integrate(sys.pencil.at(t0), G.members[h_index].poly, x0, c.dt, c.steps, c.stride);
    auto drift      = conservation_report(traj, monitored);

    if(!c.out.empty()) {
        std::ofstream csv(c.out);
        if(!csv) throw std::invalid_argument("cannot write '" + c.out + "'");
        write_csv(csv, traj, monitored, sys.names, labels);
    }

    bool pass            = true;
    nlohmann::json rows  = nlohmann::json::array();
    double worst         = 0.0;
    for(std::size_t i = 0; i < drift.size(); ++i) {
        pass  = pass && drift[i] < c.tolerance;
        worst = std::max(worst, drift[i]);
        rows.push_back({{"member", labels[i]}, {"max_relative_drift", drift[i]}});
    }
    nlohmann::json cfg = config_json("flow run", c);
    cfg["dt"]          = c.dt;
    cfg["steps"]       = c.steps;
    cfg["tolerance"]   = c.tolerance;
    out << nlohmann::json{{"config", cfg},
                          {"hamiltonian", {{"index", h_index}, {"provenance", G.members[h_index].provenance.str()}}},
                          {"status", pass ? "pass" : "fail"},
                          {"max_drift", worst},
                          {"drifts", rows}}
               .dump(2)
        << '\n';
    return pass ? kExitPass : kExitCertificateFailure;
}

int cmd_golden(const RunConfig& c, std::ostream& out) {
    auto weights = resolve_weights(c);
    Element z0   = c.shift.empty() ? Element{Rational(1), Rational(2), Rational(3)} : parse_rational_list(c.shift);
    GoldenReport report = golden_sl2_example(c.sites, weights, z0);
    nlohmann::json j    = report.to_json();
    j["config"]         = config_json("golden sl2-example", c);
    emit(j, c.out, out);
    return report.pass() ? kExitPass : kExitCertificateFailure;
}

void add_common(CLI::App* app, RunConfig& c) {
    app->add_option("--algebra", c.algebra, "catalog name (sl2, so3, sl3, gl2, abelian<d>) or JSON file");
    app->add_option("--sites", c.sites, "number of sites N")->check(CLI::PositiveNumber);
    app->add_option("--weights", c.weights, "comma-separated distinct rationals (default 0,1,...,N-1)");
    app->add_option("--t0", c.t0, "pencil direction t1,t2");
    app->add_option("--shift", c.shift, "comma-separated shift element of g* (default: random regular)");
    app->add_option("--seed", c.seed, "random seed");
    app->add_option("--out", c.out, "output path");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bi-Poisson Gaudin pencils: construction and exact certificates", "bipencil"};
    app.require_subcommand(1);
    RunConfig c;
    std::string which;

    auto* algebra = app.add_subcommand("algebra", "Lie algebra utilities");
    algebra->require_subcommand(1);
    auto* check = algebra->add_subcommand("check", "verify the Jacobi identity");
    check->add_option("--algebra", c.algebra)->required();
    check->add_option("--out", c.out);

    auto* build = app.add_subcommand("build", "write pencil.json, family_F.json, family_G.json");
    add_common(build, c);

    auto* verify = app.add_subcommand("verify", "run certificates at seeded random points");
    verify->add_option("which", which, "involutivity|independence|admissibility|kronecker|all")
        ->required()
        ->check(CLI::IsMember({"involutivity", "independence", "admissibility", "kronecker", "all"}));
    add_common(verify, c);
    verify->add_option("--family", c.family, "family JSON to check instead of the constructed one");
    verify->add_option("--points", c.points, "number of random points")->check(CLI::PositiveNumber);

    auto* flow = app.add_subcommand("flow", "Hamiltonian flow and conservation monitoring");
    flow->require_subcommand(1);
    auto* run = flow->add_subcommand("run", "integrate with RK4 and report drifts");
    add_common(run, c);
    run->add_option("--dt", c.dt, "time step");
    run->add_option("--steps", c.steps, "number of steps");
    run->add_option("--stride", c.stride, "CSV sampling stride")->check(CLI::PositiveNumber);
    run->add_option("--tolerance", c.tolerance, "maximal admissible relative drift");
    run->add_option("--hamiltonian", c.hamiltonian, "index of the family member used as H");

    auto* golden = app.add_subcommand("golden", "closed-form reproductions");
    golden->require_subcommand(1);
    auto* sl2ex = golden->add_subcommand("sl2-example", "the sl2 example on R^{2N}");
    sl2ex->add_option("--sites", c.sites)->check(CLI::PositiveNumber);
    sl2ex->add_option("--weights", c.weights);
    sl2ex->add_option("--shift", c.shift, "z0 as z1,z2,z3");
    sl2ex->add_option("--out", c.out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch(const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch(const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if(check->parsed()) return cmd_algebra_check(c, out);
        if(build->parsed()) return cmd_build(c, out);
        if(verify->parsed()) return cmd_verify(which, c, out);
        if(run->parsed()) return cmd_flow(c, out);
        if(sl2ex->parsed()) return cmd_golden(c, out);
    } catch(const std::invalid_argument& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch(const std::domain_error& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch(const FlowError& e) {
        err << "flow error at step " << e.step() << ": " << e.what() << '\n';
        return kExitCertificateFailure;
    } catch(const nlohmann::json::exception& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    }
    err << "error: no command given\n";
    return kExitValidation;
}

} // namespace bipencil
