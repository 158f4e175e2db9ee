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

#include "bipencil/gaudin.hpp"
#include "bipencil/poisson.hpp"
#include "bipencil/sampler.hpp"

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace bipencil {

/// Polynomial with double coefficients laid out for fast repeated evaluation.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const Poly& p);

    double operator()(std::span<const double> x) const;

private:
    struct Term {
        double coeff;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, exponent)
    };
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    Poly hamiltonian;
};

/// Raised when the state stops being finite.
class FlowError : public std::runtime_error {
public:
    FlowError(std::size_t step, const std::string& what) : std::runtime_error(what), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// Classical RK4 on x' = hamiltonian_field(P, H)(x). Every `stride`-th state
/// is stored, plus the initial and final ones.
Trajectory integrate(const Bivector& P,
                     const Poly& H,
                     std::span<const double> x0,
                     double dt,
                     std::size_t steps,
                     std::size_t stride = 1);

/// max over stored states of |f(x(t)) - f(x0)| / max(1, |f(x0)|), per member.
std::vector<double> conservation_report(const Trajectory& traj, std::span<const Poly> members);
std::vector<double> conservation_report(const Trajectory& traj, const IntegralFamily& fam);

/// Seeded floating-point start point for flows on the ambient space.
/// For sl2 sites each x_j is drawn on the forward sheet of an elliptic
/// orbit (h^2 + 4ef < 0, e - f > 0); the conserved total moment then keeps
/// every site bounded. Other models draw coordinates uniformly in [-1, 1].
std::vector<double> flow_start(const GaudinSystem& system, Sampler& sampler);

/// time, state components, then each member's value; one row per stored state.
void write_csv(std::ostream& os,
               const Trajectory& traj,
               std::span<const Poly> members,
               std::span<const std::string> state_names,
               std::span<const std::string> member_names);

} // namespace bipencil
