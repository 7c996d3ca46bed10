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
#include <optional>
#include <span>
#include <vector>

#include "oqwc/channel.hpp"
#include "oqwc/complex_matrix.hpp"

namespace oqwc {

/// Labeled edge i -> j of a walk graph carrying the operator B_i^j.
struct Edge {
    std::size_t from;
    std::size_t to;
    ComplexMatrix op;
};

/// The operators {B_i^j} of an open quantum walk on a finite graph.
///
/// Absent edges are zero operators and are simply not stored. For every node
/// i, sum_j B_i^j^dagger B_i^j must equal the identity within tol::kCptp; the
/// constructor rejects sets that violate this.
class TransitionOperatorSet {
public:
    TransitionOperatorSet(std::size_t num_nodes, std::size_t internal_dim, std::vector<Edge> edges);

    std::size_t num_nodes() const noexcept { return num_nodes_; }
    std::size_t internal_dim() const noexcept { return internal_dim_; }

    /// Edges ordered by (from, to).
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Indices into edges() of the edges ending at `node`, ordered by source.
    std::span<const std::size_t> incoming(std::size_t node) const { return incoming_.at(node); }

    /// B_from^to, or nullptr when the edge is absent.
    const ComplexMatrix* find(std::size_t from, std::size_t to) const;

    /// Per-node Kraus set {B_i^j}_j, for checks against the channel primitives.
    KrausSet outgoing_kraus(std::size_t node) const;

private:
    std::size_t num_nodes_;
    std::size_t internal_dim_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incoming_;
};

/// Block-diagonal walker state sum_i rho_ii (x) |i><i|.
///
/// Graph coherences rho_ij (i != j) are never stored: they vanish after the
/// first step, so only block-diagonal initial states are accepted.
class OqwState {
public:
    /// Validates block dimensions and sum_i tr(rho_ii) = 1 within tol::kTrace.
    explicit OqwState(std::vector<DensityBlock> blocks);

    static OqwState unchecked(std::vector<DensityBlock> blocks);

    /// All probability on `node`, internal state `rho` (unit trace).
    static OqwState localized(std::size_t num_nodes, std::size_t node, const DensityBlock& rho);

    std::size_t num_nodes() const noexcept { return blocks_.size(); }
    std::size_t internal_dim() const noexcept { return blocks_.front().dim(); }
    const DensityBlock& block(std::size_t node) const { return blocks_.at(node); }
    std::span<const DensityBlock> blocks() const noexcept { return blocks_; }

private:
    struct Unchecked {};
    OqwState(std::vector<DensityBlock> blocks, Unchecked) : blocks_(std::move(blocks)) {}

    std::vector<DensityBlock> blocks_;
};

/// One walk step: rho_jj' = sum_i B_i^j rho_ii B_i^j^dagger. Serial reference.
OqwState oqw_step(const TransitionOperatorSet& ops, const OqwState& state);

/// Same map with destination nodes distributed over OpenMP threads. Each
/// destination accumulates its sources in the same order as oqw_step, so the
/// result is bitwise identical.
OqwState oqw_step_parallel(const TransitionOperatorSet& ops, const OqwState& state);

/// `steps`-fold application of oqw_step; evolve(ops, s, 0) == s.
OqwState evolve(const TransitionOperatorSet& ops, OqwState state, std::size_t steps);

/// p_i = tr(rho_ii).
std::vector<double> node_distribution(const OqwState& state);

/// rho_node / tr(rho_node). Throws NumericalError when the node's occupation
/// is at or below tol::kPostselect.
DensityBlock conditional_state(const OqwState& state, std::size_t node);

/// (1/2) sum_i |p_i - q_i|.
double total_variation(std::span<const double> p, std::span<const double> q);

struct ConvergenceResult {
    OqwState state;
    std::size_t steps;
    bool converged;
};

/// Steps until the total variation between successive node distributions
/// drops below `tv_tol`, or `max_steps` is reached.
ConvergenceResult evolve_until_converged(const TransitionOperatorSet& ops, OqwState state, std::size_t max_steps,
                                         double tv_tol = 1e-8);

} // namespace oqwc
