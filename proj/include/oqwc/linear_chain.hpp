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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oqwc/complex_matrix.hpp"
#include "oqwc/oqw.hpp"

namespace oqwc {

/// Line graph 0 - 1 - ... - (N-1) with terminal self-loops. A rightward hop
/// i -> i+1 applies sqrt(omega) U_i, a leftward hop undoes it with
/// sqrt(1 - omega) U_i^dagger, node 0 keeps sqrt(1 - omega) 1 and node N-1
/// keeps sqrt(omega) 1.
class LinearChainSpec {
public:
    /// Throws DomainError for fewer than one unitary, a non-unitary entry or
    /// omega outside [0, 1]; DimensionError for mixed dimensions.
    LinearChainSpec(std::vector<ComplexMatrix> unitaries, double omega);

    std::span<const ComplexMatrix> unitaries() const noexcept { return unitaries_; }
    std::size_t num_nodes() const noexcept { return unitaries_.size() + 1; }
    std::size_t internal_dim() const noexcept { return unitaries_.front().dim(); }
    double omega() const noexcept { return omega_; }
    double lambda() const noexcept { return 1.0 - omega_; }

private:
    std::vector<ComplexMatrix> unitaries_;
    double omega_;
};

/// Edges with zero weight (omega in {0, 1}) are omitted.
TransitionOperatorSet build_linear_chain(const LinearChainSpec& spec);

/// Column-stochastic N x N matrix of the node-occupation Markov chain,
/// stored row-major: p' = T p.
class MarkovChain {
public:
    MarkovChain(std::size_t size, std::vector<double> matrix);

    std::size_t size() const noexcept { return size_; }
    double operator()(std::size_t row, std::size_t col) const noexcept { return t_[row * size_ + col]; }

    std::vector<double> apply(std::span<const double> p) const;

    /// T^steps p.
    std::vector<double> evolve(std::span<const double> p, std::size_t steps) const;

private:
    std::size_t size_;
    std::vector<double> t_;
};

MarkovChain transition_matrix(std::size_t num_nodes, double omega);

struct SteadyState {
    std::vector<double> pi;
    /// omega in {0, 1}: the chain is absorbed at node 0 (resp. N-1) and `pi`
    /// is the point mass there.
    bool absorbing = false;
};

/// pi_m = a^m (a - 1) / (a^N - 1) with a = omega / (1 - omega); the uniform
/// limit 1/N is used when |a - 1| < 1e-9.
SteadyState steady_state(std::size_t num_nodes, double omega);

/// ceil(N / (2 omega - 1)). Only defined for omega > 1/2; throws DomainError
/// otherwise.
std::size_t iterations_estimate(std::size_t num_nodes, double omega);

/// Expected number of independent repetitions until one run both ends at the
/// terminal node (steady-state probability pi_{N-1}) and passes a further
/// post-selection of probability `postselect_prob`.
double expected_repetitions(std::size_t num_nodes, double omega, double postselect_prob);

} // namespace oqwc
