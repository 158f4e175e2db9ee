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

#include "bipencil/flow.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace bipencil {

CompiledPoly::CompiledPoly(const Poly& p) : nvars_(p.nvars()) {
    for(const auto& [m, c] : p.terms()) {
        Term t{c.get_d(), {}};
        for(std::size_t i = 0; i < m.size(); ++i)
            if(m[i] > 0) t.factors.emplace_back(static_cast<std::uint32_t>(i), m[i]);
        terms_.push_back(std::move(t));
    }
}

double CompiledPoly::operator()(std::span<const double> x) const {
    double sum = 0.0;
    for(const auto& t : terms_) {
        double v = t.coeff;
        for(const auto& [i, e] : t.factors)
            for(std::uint32_t k = 0; k < e; ++k) v *= x[i];
        sum += v;
    }
    return sum;
}

Trajectory integrate(const Bivector& P,
                     const Poly& H,
                     std::span<const double> x0,
                     double dt,
                     std::size_t steps,
                     std::size_t stride) {
    if(!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
    if(steps == 0) throw std::invalid_argument("integrate: steps must be at least 1");
    if(stride == 0) throw std::invalid_argument("integrate: stride must be at least 1");
    if(x0.size() != P.nvars()) throw std::invalid_argument("integrate: initial state length mismatch");

    std::vector<CompiledPoly> field;
    for(const auto& c : hamiltonian_field(P, H)) field.emplace_back(c);
    const std::size_t m = x0.size();

    auto rhs = [&](const std::vector<double>& x, std::vector<double>& out) {
        for(std::size_t i = 0; i < m; ++i) out[i] = field[i](x);
    };

    Trajectory traj;
    traj.hamiltonian = H;
    std::vector<double> x(x0.begin(), x0.end());
    traj.times.push_back(0.0);
    traj.states.push_back(x);

    std::vector<double> k1(m), k2(m), k3(m), k4(m), tmp(m);
    for(std::size_t step = 1; step <= steps; ++step) {
        rhs(x, k1);
        for(std::size_t i = 0; i < m; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
        rhs(tmp, k2);
        for(std::size_t i = 0; i < m; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
        rhs(tmp, k3);
        for(std::size_t i = 0; i < m; ++i) tmp[i] = x[i] + dt * k3[i];
        rhs(tmp, k4);
        for(std::size_t i = 0; i < m; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        if(!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); }))
            throw FlowError(step, "integrate: non-finite state at step " + std::to_string(step));
        if(step % stride == 0 || step == steps) {
            traj.times.push_back(static_cast<double>(step) * dt);
            traj.states.push_back(x);
        }
    }
    return traj;
}

std::vector<double> conservation_report(const Trajectory& traj, std::span<const Poly> members) {
    std::vector<double> drift;
    for(const auto& f : members) {
        if(!traj.states.empty() && f.nvars() != traj.states.front().size())
            throw std::invalid_argument("conservation_report: dimension mismatch");
        CompiledPoly cf(f);
        double f0    = cf(traj.states.front());
        double scale = std::max(1.0, std::abs(f0));
        double worst = 0.0;
        for(const auto& x : traj.states) worst = std::max(worst, std::abs(cf(x) - f0) / scale);
        drift.push_back(worst);
    }
    return drift;
}

std::vector<double> conservation_report(const Trajectory& traj, const IntegralFamily& fam) {
    auto polys = fam.polys();
    return conservation_report(traj, polys);
}

void write_csv(std::ostream& os,
               const Trajectory& traj,
               std::span<const Poly> members,
               std::span<const std::string> state_names,
               std::span<const std::string> member_names) {
    os << "time";
    for(const auto& n : state_names) os << ',' << n;
    for(const auto& n : member_names) os << ',' << n;
    os << '\n';
    std::vector<CompiledPoly> compiled(members.begin(), members.end());
    os << std::setprecision(17);
    for(std::size_t s = 0; s < traj.states.size(); ++s) {
        os << traj.times[s];
        for(double v : traj.states[s]) os << ',' << v;
        for(const auto& f : compiled) os << ',' << f(traj.states[s]);
        os << '\n';
    }
}

std::vector<double> flow_start(const GaudinSystem& system, Sampler& sampler) {
    std::vector<double> x(system.ambient_dim);
    if(system.kind != ModelKind::coadjoint || system.algebra.name() != "sl2") {
        for(auto& v : x) v = sampler.uniform(-1.0, 1.0);
        return x;
    }
    for(std::size_t j = 0; j < system.sites(); ++j) {
        double h = sampler.uniform(-1.0, 1.0);
        double w = sampler.uniform(-1.0, 1.0);
        double u = std::sqrt(h * h / 4.0 + w * w) + sampler.uniform(0.5, 1.5);
        x[3 * j]     = h;
        x[3 * j + 1] = u + w;
        x[3 * j + 2] = w - u;
    }
    return x;
}

} // namespace bipencil
