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

#include <span>
#include <vector>

#include "oqwc/complex_matrix.hpp"

namespace oqwc {

/// Smallest eigenvalue of the Hermitian part (A + A^dagger)/2.
double min_eigenvalue_hermitian(const ComplexMatrix& a);

/// An unnormalized density operator: Hermitian, positive semidefinite,
/// trace in [0, 1 + tol::kTrace]. Blocks of a walker state carry the node
/// occupation probability as their trace.
class DensityBlock {
public:
    /// Validates every invariant; throws DomainError on violation.
    explicit DensityBlock(ComplexMatrix m);

    /// Wraps `m` without validation. For results of maps that preserve the
    /// invariants by construction (channel application, walk steps).
    static DensityBlock unchecked(ComplexMatrix m) { return DensityBlock(std::move(m), Unchecked{}); }

    static DensityBlock pure(std::span<const Complex> psi) { return DensityBlock(projector(psi)); }

    const ComplexMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }
    double trace() const noexcept { return m_.trace().real(); }

    /// Copy scaled to unit trace; throws NumericalError if the trace is below
    /// tol::kPostselect.
    DensityBlock normalized() const;

private:
    struct Unchecked {};
    DensityBlock(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

/// Operators {K_i} of a channel rho -> sum_i K_i rho K_i^dagger.
class KrausSet {
public:
    /// Throws DomainError when empty and DimensionError on mixed dimensions.
    /// Completeness is not enforced here; see check_kraus_completeness.
    explicit KrausSet(std::vector<ComplexMatrix> ops);

    std::span<const ComplexMatrix> operators() const noexcept { return ops_; }
    std::size_t dim() const noexcept { return ops_.front().dim(); }
    std::size_t size() const noexcept { return ops_.size(); }

private:
    std::vector<ComplexMatrix> ops_;
};

/// sum_i K_i^dagger K_i.
ComplexMatrix completeness_sum(const KrausSet& k);

/// True iff max |sum_i K_i^dagger K_i - 1| <= tol.
bool check_kraus_completeness(const KrausSet& k, double tol = 1e-10);

/// Lambda(rho) = sum_i K_i rho K_i^dagger. Throws DimensionError on a size
/// mismatch and DomainError if `k` is not trace preserving.
DensityBlock apply_channel(const KrausSet& k, const DensityBlock& rho);

/// <psi|rho|psi> for a unit-trace rho and unit-norm psi.
double fidelity_pure(const DensityBlock& rho, std::span<const Complex> psi);

} // namespace oqwc
