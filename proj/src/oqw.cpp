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

#include "oqwc/oqw.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "oqwc/error.hpp"
#include "oqwc/tolerances.hpp"

namespace oqwc {

TransitionOperatorSet::TransitionOperatorSet(std::size_t num_nodes, std::size_t internal_dim,
                                             std::vector<Edge> edges)
    : num_nodes_(num_nodes), internal_dim_(internal_dim), edges_(std::move(edges)), incoming_(num_nodes) {
    if (num_nodes == 0 || internal_dim == 0) {
        throw DimensionError("TransitionOperatorSet: empty graph or internal space");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });

    std::vector<ComplexMatrix> completeness(num_nodes, ComplexMatrix(internal_dim));
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (edge.from >= num_nodes || edge.to >= num_nodes) {
            throw DimensionError("TransitionOperatorSet: edge " + std::to_string(edge.from) + "->" +
                                 std::to_string(edge.to) + " outside graph");
        }
        if (edge.op.dim() != internal_dim) {
            throw DimensionError("TransitionOperatorSet: operator dimension " + std::to_string(edge.op.dim()) +
                                 " != " + std::to_string(internal_dim));
        }
        if (e > 0 && edges_[e - 1].from == edge.from && edges_[e - 1].to == edge.to) {
            throw DomainError("TransitionOperatorSet: duplicate edge " + std::to_string(edge.from) + "->" +
                              std::to_string(edge.to));
        }
        completeness[edge.from] += matmul(dagger(edge.op), edge.op);
        incoming_[edge.to].push_back(e);
    }

    const ComplexMatrix id = ComplexMatrix::identity(internal_dim);
    for (std::size_t i = 0; i < num_nodes; ++i) {
        if (max_abs_diff(completeness[i], id) > tol::kCptp) {
            throw DomainError("TransitionOperatorSet: outgoing operators of node " + std::to_string(i) +
                              " are not complete");
        }
    }
}

const ComplexMatrix* TransitionOperatorSet::find(std::size_t from, std::size_t to) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(from, to), [](const Edge& e, const auto& key) {
        return std::pair(e.from, e.to) < key;
    });
    if (it == edges_.end() || it->from != from || it->to != to) {
        return nullptr;
    }
    return &it->op;
}

KrausSet TransitionOperatorSet::outgoing_kraus(std::size_t node) const {
    std::vector<ComplexMatrix> ops;
    for (const auto& e : edges_) {
        if (e.from == node) {
            ops.push_back(e.op);
        }
    }
    return KrausSet(std::move(ops));
}

OqwState::OqwState(std::vector<DensityBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw DimensionError("OqwState: no nodes");
    }
    double total = 0.0;
    for (const auto& b : blocks_) {
        if (b.dim() != blocks_.front().dim()) {
            throw DimensionError("OqwState: blocks of different dimensions");
        }
        total += b.trace();
    }
    if (std::abs(total - 1.0) > tol::kTrace) {
        throw DomainError("OqwState: total trace " + std::to_string(total) + " != 1");
    }
}

OqwState OqwState::unchecked(std::vector<DensityBlock> blocks) { return OqwState(std::move(blocks), Unchecked{}); }

OqwState OqwState::localized(std::size_t num_nodes, std::size_t node, const DensityBlock& rho) {
    if (node >= num_nodes) {
        throw DimensionError("OqwState::localized: node out of range");
    }
    std::vector<DensityBlock> blocks(num_nodes, DensityBlock::unchecked(ComplexMatrix(rho.dim())));
    blocks[node] = rho;
    return OqwState(std::move(blocks));
}

namespace {

void check_compatible(const TransitionOperatorSet& ops, const OqwState& state) {
    if (ops.num_nodes() != state.num_nodes() || ops.internal_dim() != state.internal_dim()) {
        throw DimensionError("oqw_step: walk has " + std::to_string(ops.num_nodes()) + " nodes of dimension " +
                             std::to_string(ops.internal_dim()) + ", state has " +
                             std::to_string(state.num_nodes()) + " of dimension " +
                             std::to_string(state.internal_dim()));
    }
}

ComplexMatrix gather(const TransitionOperatorSet& ops, const OqwState& state, std::size_t node) {
    ComplexMatrix acc(ops.internal_dim());
    const auto edges = ops.edges();
    for (std::size_t e : ops.incoming(node)) {
        acc += sandwich(edges[e].op, state.block(edges[e].from).matrix());
    }
    return acc;
}

} // namespace

OqwState oqw_step(const TransitionOperatorSet& ops, const OqwState& state) {
    check_compatible(ops, state);
    std::vector<ComplexMatrix> next(ops.num_nodes(), ComplexMatrix(ops.internal_dim()));
    for (const Edge& e : ops.edges()) {
        next[e.to] += sandwich(e.op, state.block(e.from).matrix());
    }
    std::vector<DensityBlock> blocks;
    blocks.reserve(next.size());
    for (auto& m : next) {
        blocks.push_back(DensityBlock::unchecked(std::move(m)));
    }
    return OqwState::unchecked(std::move(blocks));
}

OqwState oqw_step_parallel(const TransitionOperatorSet& ops, const OqwState& state) {
    check_compatible(ops, state);
    const auto n = static_cast<std::ptrdiff_t>(ops.num_nodes());
    std::vector<ComplexMatrix> next(ops.num_nodes());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        next[static_cast<std::size_t>(j)] = gather(ops, state, static_cast<std::size_t>(j));
    }
    std::vector<DensityBlock> blocks;
    blocks.reserve(next.size());
    for (auto& m : next) {
        blocks.push_back(DensityBlock::unchecked(std::move(m)));
    }
    return OqwState::unchecked(std::move(blocks));
}

OqwState evolve(const TransitionOperatorSet& ops, OqwState state, std::size_t steps) {
    check_compatible(ops, state);
    for (std::size_t n = 0; n < steps; ++n) {
        state = oqw_step(ops, state);
    }
    return state;
}

std::vector<double> node_distribution(const OqwState& state) {
    std::vector<double> p;
    p.reserve(state.num_nodes());
    for (const auto& b : state.blocks()) {
        p.push_back(b.trace());
    }
    return p;
}

DensityBlock conditional_state(const OqwState& state, std::size_t node) {
    if (node >= state.num_nodes()) {
        throw DimensionError("conditional_state: node out of range");
    }
    const double p = state.block(node).trace();
    if (p <= tol::kPostselect) {
        throw NumericalError("conditional_state: node " + std::to_string(node) + " has occupation " +
                             std::to_string(p) + ", below the post-selection threshold");
    }
    return state.block(node).normalized();
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw DimensionError("total_variation: length mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += std::abs(p[i] - q[i]);
    }
    return 0.5 * s;
}

ConvergenceResult evolve_until_converged(const TransitionOperatorSet& ops, OqwState state, std::size_t max_steps,
                                         double tv_tol) {
    check_compatible(ops, state);
    std::vector<double> prev = node_distribution(state);
    for (std::size_t n = 1; n <= max_steps; ++n) {
        state = oqw_step(ops, state);
        std::vector<double> cur = node_distribution(state);
        if (total_variation(prev, cur) < tv_tol) {
            return {std::move(state), n, true};
        }
        prev = std::move(cur);
    }
    return {std::move(state), max_steps, false};
}

} // namespace oqwc
