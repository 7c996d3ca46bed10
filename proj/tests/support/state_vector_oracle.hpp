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

#include <cmath>
#include <span>

#include "oqwc/classifier.hpp"
#include "oqwc/complex_matrix.hpp"

namespace oqwc::testing {

/// Full register simulation: ancilla (2) x index (M) x features (D) x class (2).
/// Prepares the uniform superposition of (|0>|x~> + |1>|x_m>)|m>|y_m>, applies H
/// to the ancilla and projects it onto |0>.
inline ExactProbabilities state_vector_probabilities(const LabeledDataset& d, std::span<const double> x_test) {
    const std::size_t m = d.size();
    const std::size_t dim = d.feature_dim();
    const std::size_t rest = m * dim * 2;
    StateVector psi(2 * rest, 0.0);
    const double amp = 1.0 / std::sqrt(2.0 * static_cast<double>(m));
    for (std::size_t k = 0; k < m; ++k) {
        const auto& p = d.points()[k];
        const std::size_t cls = p.label < 0 ? 0 : 1;
        for (std::size_t f = 0; f < dim; ++f) {
            const std::size_t tail = (k * dim + f) * 2 + cls;
            psi[tail] += amp * x_test[f];
            psi[rest + tail] += amp * p.x[f];
        }
    }
    psi = matvec(kron(gates::hadamard(), ComplexMatrix::identity(rest)), psi);
    double accept = 0.0;
    double cls[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < rest; ++i) {
        const double w = std::norm(psi[i]);
        accept += w;
        cls[i % 2] += w;
    }
    return {accept, cls[0] / accept, cls[1] / accept};
}

} // namespace oqwc::testing
