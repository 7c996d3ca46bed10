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

#include "oqwc/channel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

#include "oqwc/error.hpp"
#include "oqwc/tolerances.hpp"

namespace oqwc {

double min_eigenvalue_hermitian(const ComplexMatrix& a) {
    const auto n = static_cast<Eigen::Index>(a.dim());
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            h(i, j) = 0.5 * (a(ui, uj) + std::conj(a(uj, ui)));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityBlock::DensityBlock(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.empty()) {
        throw DimensionError("DensityBlock: empty matrix");
    }
    if (!is_hermitian(m_, tol::kHermitian)) {
        throw DomainError("DensityBlock: matrix is not Hermitian");
    }
    const double tr = trace();
    if (tr < -tol::kTrace || tr > 1.0 + tol::kTrace) {
        throw DomainError("DensityBlock: trace " + std::to_string(tr) + " outside [0, 1]");
    }
    if (min_eigenvalue_hermitian(m_) < -tol::kPsd) {
        throw DomainError("DensityBlock: matrix is not positive semidefinite");
    }
}

DensityBlock DensityBlock::normalized() const {
    const double tr = trace();
    if (tr <= tol::kPostselect) {
        throw NumericalError("DensityBlock: cannot normalize block with trace " + std::to_string(tr));
    }
    return unchecked((1.0 / tr) * m_);
}

KrausSet::KrausSet(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw DomainError("KrausSet: no operators");
    }
    for (const auto& k : ops_) {
        if (k.dim() != ops_.front().dim()) {
            throw DimensionError("KrausSet: operators of different dimensions");
        }
    }
}

ComplexMatrix completeness_sum(const KrausSet& k) {
    ComplexMatrix sum(k.dim());
    for (const auto& op : k.operators()) {
        sum += matmul(dagger(op), op);
    }
    return sum;
}

bool check_kraus_completeness(const KrausSet& k, double tol) {
    return max_abs_diff(completeness_sum(k), ComplexMatrix::identity(k.dim())) <= tol;
}

DensityBlock apply_channel(const KrausSet& k, const DensityBlock& rho) {
    if (k.dim() != rho.dim()) {
        throw DimensionError("apply_channel: Kraus dimension " + std::to_string(k.dim()) +
                             " vs state dimension " + std::to_string(rho.dim()));
    }
    if (!check_kraus_completeness(k, tol::kCptp)) {
        throw DomainError("apply_channel: Kraus set is not trace preserving");
    }
    ComplexMatrix out(rho.dim());
    for (const auto& op : k.operators()) {
        out += sandwich(op, rho.matrix());
    }
    return DensityBlock::unchecked(std::move(out));
}

double fidelity_pure(const DensityBlock& rho, std::span<const Complex> psi) {
    if (psi.size() != rho.dim()) {
        throw DimensionError("fidelity_pure: dimension mismatch");
    }
    if (std::abs(rho.trace() - 1.0) > 1e-9) {
        throw DomainError("fidelity_pure: state is not normalized");
    }
    if (std::abs(norm(psi) - 1.0) > 1e-9) {
        throw DomainError("fidelity_pure: vector is not normalized");
    }
    const StateVector rpsi = matvec(rho.matrix(), psi);
    Complex f = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        f += std::conj(psi[i]) * rpsi[i];
    }
    return f.real();
}

} // namespace oqwc
