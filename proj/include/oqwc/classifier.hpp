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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oqwc/channel.hpp"
#include "oqwc/complex_matrix.hpp"

namespace oqwc {

using FeatureVector = std::vector<double>;
using Vec2 = std::array<double, 2>;

/// Class decision. Label -1 corresponds to class ket |0>, +1 to |1>.
enum class Prediction : int { Minus = -1, Tie = 0, Plus = 1 };

const char* to_string(Prediction p) noexcept;

/// Tie when |p_plus - p_minus| < tol::kTie.
Prediction predict_from_probabilities(double p_minus, double p_plus) noexcept;

struct LabeledPoint {
    FeatureVector x;
    int label;
};

/// Unit-norm feature vectors of a common dimension with labels in {-1, +1}.
class LabeledDataset {
public:
    explicit LabeledDataset(std::vector<LabeledPoint> points);

    std::span<const LabeledPoint> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    std::size_t feature_dim() const noexcept { return points_.front().x.size(); }

private:
    std::vector<LabeledPoint> points_;
};

// ---------------------------------------------------------------------------
// Classical distance-based classifier

/// K(x, x') = 1 - |x - x'|^2 / (4M) for unit vectors.
double kernel(std::span<const double> x, std::span<const double> x2, std::size_t dataset_size);

/// sum_m y_m K(x_m, x_test).
double classical_score(const LabeledDataset& d, std::span<const double> x_test);

/// Sign of classical_score; Tie when its magnitude is below tol::kTie.
Prediction classical_classify(const LabeledDataset& d, std::span<const double> x_test);

// ---------------------------------------------------------------------------
// Quantum distance-based classifier, closed-form probabilities

struct ExactProbabilities {
    double p_accept; // ancilla post-selection success, sum_m |x + x_m|^2 / 4M
    double p_minus;
    double p_plus;

    Prediction prediction() const noexcept { return predict_from_probabilities(p_minus, p_plus); }
};

/// Throws NumericalError when p_accept <= tol::kPostselect (test point
/// antipodal to every training point).
ExactProbabilities quantum_exact_probabilities(const LabeledDataset& d, std::span<const double> x_test);

struct IdentitySides {
    double lhs;
    double rhs;
};

/// lhs = sum_m y_m (1 - |x_m - x|^2 / 4M), rhs = p_accept (p_plus - p_minus).
///
/// The two sides differ by (M_+ - M_-)(1 - 1/M), so they agree exactly only
/// for datasets with equally many points per class, which includes the
/// two-point sets used by the circuit.
IdentitySides expectation_identity_check(const LabeledDataset& d, std::span<const double> x_test);

// ---------------------------------------------------------------------------
// Reduced two-qubit circuit for D' = {(x0, -1), (x1, +1)} and test point x~

struct TripleAngles {
    double phi;   // x1 in the frame where x0 encodes |0>
    double gamma; // x~ in the same frame
};

/// Each vector v is encoded as R_y(a)|0> = cos(a/2)|0> + sin(a/2)|1> after
/// rotating the plane so that x0 becomes (1, 0). Angles lie in (-2pi, 2pi],
/// with cos(phi/2) = <x0, x1> and cos(gamma/2) = <x0, x~>.
TripleAngles angles_from_triple(const Vec2& x0, const Vec2& x1, const Vec2& x_test);

/// t = cos^2(gamma/4) / cos^2((gamma - phi)/4), the ratio P(y=|0>)/P(y=|1>).
/// Throws NumericalError when |cos((gamma - phi)/4)| < 1e-12.
double ratio_t(double gamma, double phi);

/// omega' = 4 atan((1 - sqrt t) / (1 + sqrt t)), in (-pi, pi]. Throws
/// DomainError for negative or non-finite t.
double omega_prime_from_t(double t);

/// (1 - sin(omega'/2))^2 / cos^2(omega'/2): the class ratio the circuit produces.
double t_from_omega_prime(double omega_prime);

/// Both sides of (1 - tan(x/2)) / (1 + tan(x/2)) = (1 - sin x) / cos x.
/// Throws DomainError at the poles cos x = 0 (x != pi/2 mod 2pi) and
/// tan(x/2) = -1.
IdentitySides tangent_half_angle_identity(double x);

/// U1 = H (x) R_y(-omega'/2), U2 = CNOT, U3 = H (x) R_y(omega'/2); the first
/// qubit is the ancilla, the second the class register.
std::array<ComplexMatrix, 3> build_classifier_unitaries(double omega_prime);

struct ClassifierOutcome {
    double p_accept; // probability of the ancilla reading |0>
    double p_minus;  // P'(y = |0>) after post-selection
    double p_plus;   // P'(y = |1>)
    Prediction prediction;
};

/// Post-selects the ancilla of a normalized two-qubit state on |0> and reads
/// the class register. Throws NumericalError if p_accept <= tol::kPostselect.
ClassifierOutcome outcome_from_state(const DensityBlock& two_qubit_state);

/// U3 U2 U1 |00> by direct state-vector products.
StateVector circuit_state(double omega_prime);

ClassifierOutcome run_circuit_reference(double omega_prime);

struct WalkOutcome {
    ClassifierOutcome outcome;
    double terminal_probability; // occupation of node 3 when post-selected
    DensityBlock terminal_state; // conditional internal state at node 3
};

/// Runs the circuit as a 4-node linear open quantum walk: |00><00| at node 0,
/// `steps` walk steps, post-selection on node 3, then on the ancilla.
/// omega may be 1 (deterministic conveyor). Throws DomainError for omega
/// outside (0, 1] or steps == 0, NumericalError when node 3 is (nearly)
/// unoccupied.
WalkOutcome run_classifier_oqw(double omega_prime, double omega, std::size_t steps);

/// A triple with everything the reduced circuit needs.
struct ClassifierInstance {
    Vec2 x0;     // label -1
    Vec2 x1;     // label +1
    Vec2 x_test;
    double phi;
    double gamma;
    double t;
    double omega_prime;

    /// Throws NumericalError when t is singular (x_test antipodal to x1).
    static ClassifierInstance from_triple(const Vec2& x0, const Vec2& x1, const Vec2& x_test);

    LabeledDataset training_set() const;
};

struct SampledOutcome {
    std::size_t shots;
    std::size_t accepted; // shots that reached node 3 and passed the ancilla
    std::size_t minus_counts;
    std::size_t plus_counts;
    Prediction prediction; // majority of accepted shots
};

/// Simulates `shots` independent runs of the walk: each run is kept with
/// probability terminal_probability * outcome.p_accept and then yields a class.
SampledOutcome sample_outcome(double terminal_probability, const ClassifierOutcome& outcome, std::size_t shots,
                              std::uint64_t seed);

} // namespace oqwc
