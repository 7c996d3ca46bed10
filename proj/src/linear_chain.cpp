// Copyright 2026 The oqwc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oqwc/linear_chain.hpp"

#include <cmath>
#include <string>

#include "oqwc/error.hpp"
#include "oqwc/tolerances.hpp"

namespace oqwc {

namespace {

void require_omega(double omega, const char* where) {
    if (!(omega >= 0.0 && omega <= 1.0)) {
        throw DomainError(std::string(where) + ": omega must lie in [0, 1], got " + std::to_string(omega));
    }
}

void require_nodes(std::size_t n, const char* where) {
    if (n < 2) {
        throw DomainError(std::string(where) + ": need at least 2 nodes");
    }
}

} // namespace

LinearChainSpec::LinearChainSpec(std::vector<ComplexMatrix> unitaries, double omega)
    : unitaries_(std::move(unitaries)), omega_(omega) {
    require_omega(omega, "LinearChainSpec");
    if (unitaries_.empty()) {
        throw DomainError("LinearChainSpec: need at least one unitary (two nodes)");
    }
    for (std::size_t i = 0; i < unitaries_.size(); ++i) {
        if (unitaries_[i].dim() != unitaries_.front().dim()) {
            throw DimensionError("LinearChainSpec: unitaries of different dimensions");
        }
        if (!is_unitary(unitaries_[i], tol::kUnitary)) {
            throw DomainError("LinearChainSpec: U_" + std::to_string(i) + " is not unitary");
        }
    }
}

TransitionOperatorSet build_linear_chain(const LinearChainSpec& spec) {
    const std::size_t n = spec.num_nodes();
    const std::size_t d = spec.internal_dim();
    const double right = std::sqrt(spec.omega());
    const double left = std::sqrt(spec.lambda());
    const ComplexMatrix id = ComplexMatrix::identity(d);

    std::vector<Edge> edges;
    auto add = [&](std::size_t from, std::size_t to, double weight, const ComplexMatrix& op) {
        if (weight > 0.0) {
            edges.push_back({from, to, weight * op});
        }
    };
    add(0, 0, left, id);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const ComplexMatrix& u = spec.unitaries()[i];
        add(i, i + 1, right, u);
        add(i + 1, i, left, dagger(u));
    }
    add(n - 1, n - 1, right, id);
    return TransitionOperatorSet(n, d, std::move(edges));
}

MarkovChain::MarkovChain(std::size_t size, std::vector<double> matrix) : size_(size), t_(std::move(matrix)) {
    if (size == 0 || t_.size() != size * size) {
        throw DimensionError("MarkovChain: expected a square matrix");
    }
    for (std::size_t c = 0; c < size; ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < size; ++r) {
            const double v = (*this)(r, c);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw DomainError("MarkovChain: entry outside [0, 1]");
            }
            col += v;
        }
        if (std::abs(col - 1.0) > 1e-12) {
            throw DomainError("MarkovChain: column " + std::to_string(c) + " does not sum to 1");
        }
    }
}

std::vector<double> MarkovChain::apply(std::span<const double> p) const {
    if (p.size() != size_) {
        throw DimensionError("MarkovChain::apply: length mismatch");
    }
    std::vector<double> out(size_, 0.0);
    for (std::size_t r = 0; r < size_; ++r) {
        for (std::size_t c = 0; c < size_; ++c) {
            out[r] += (*this)(r, c) * p[c];
        }
    }
    return out;
}

std::vector<double> MarkovChain::evolve(std::span<const double> p, std::size_t steps) const {
    std::vector<double> cur(p.begin(), p.end());
    for (std::size_t k = 0; k < steps; ++k) {
        cur = apply(cur);
    }
    return cur;
}

MarkovChain transition_matrix(std::size_t num_nodes, double omega) {
    require_nodes(num_nodes, "transition_matrix");
    require_omega(omega, "transition_matrix");
    const std::size_t n = num_nodes;
    const double lambda = 1.0 - omega;
    std::vector<double> t(n * n, 0.0);
    auto at = [&](std::size_t r, std::size_t c) -> double& { return t[r * n + c]; };
    at(0, 0) = lambda;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        at(i + 1, i) = omega;
        at(i, i + 1) = lambda;
    }
    at(n - 1, n - 1) = omega;
    return MarkovChain(n, std::move(t));
}

SteadyState steady_state(std::size_t num_nodes, double omega) {
    require_nodes(num_nodes, "steady_state");
    require_omega(omega, "steady_state");
    const std::size_t n = num_nodes;
    SteadyState s;
    s.pi.assign(n, 0.0);
    if (omega == 0.0 || omega == 1.0) {
        s.absorbing = true;
        s.pi[omega == 0.0 ? 0 : n - 1] = 1.0;
        return s;
    }
    const double a = omega / (1.0 - omega);
    if (std::abs(a - 1.0) < 1e-9) {
        s.pi.assign(n, 1.0 / static_cast<double>(n));
        return s;
    }
    // Evaluate in the ratio r = min(a, 1/a) <= 1 so large N cannot overflow:
    // for a > 1, pi_m = r^(N-1-m) (1 - r) / (1 - r^N).
    const bool grows = a > 1.0;
    const double r = grows ? 1.0 / a : a;
    const double denom = -std::expm1(static_cast<double>(n) * std::log(r));
    for (std::size_t m = 0; m < n; ++m) {
        const std::size_t k = grows ? n - 1 - m : m;
        s.pi[m] = std::pow(r, static_cast<double>(k)) * (1.0 - r) / denom;
    }
    return s;
}

std::size_t iterations_estimate(std::size_t num_nodes, double omega) {
    if (!(omega > 0.5 && omega <= 1.0)) {
        throw DomainError("iterations_estimate: only defined for omega in (1/2, 1], got " + std::to_string(omega));
    }
    const double n = static_cast<double>(num_nodes) / (2.0 * omega - 1.0);
    // Absorb rounding so exact quotients (4 / 0.4 = 10) do not round up.
    return static_cast<std::size_t>(std::ceil(n - 1e-9));
}

double expected_repetitions(std::size_t num_nodes, double omega, double postselect_prob) {
    if (!(omega > 0.0 && omega < 1.0)) {
        throw DomainError("expected_repetitions: omega must lie in (0, 1)");
    }
    if (!(postselect_prob > 0.0 && postselect_prob <= 1.0)) {
        throw NumericalError("expected_repetitions: post-selection probability must lie in (0, 1]");
    }
    const double terminal = steady_state(num_nodes, omega).pi.back();
    return 1.0 / (terminal * postselect_prob);
}

} // namespace oqwc
