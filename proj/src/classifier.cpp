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

#include "oqwc/classifier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "oqwc/error.hpp"
#include "oqwc/linear_chain.hpp"
#include "oqwc/oqw.hpp"
#include "oqwc/random.hpp"
#include "oqwc/tolerances.hpp"

namespace oqwc {

namespace {

constexpr double kPi = std::numbers::pi;

double squared_norm(std::span<const double> v) {
    double s = 0.0;
    for (double c : v) {
        s += c * c;
    }
    return s;
}

void require_unit(std::span<const double> v, const char* where) {
    if (std::abs(std::sqrt(squared_norm(v)) - 1.0) > tol::kUnitNorm) {
        throw DomainError(std::string(where) + ": feature vector is not unit norm");
    }
}

double distance_squared(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionError("feature vectors of different dimensions");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double sum_squared(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionError("feature vectors of different dimensions");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] + b[i];
        s += d * d;
    }
    return s;
}

} // namespace

const char* to_string(Prediction p) noexcept {
    switch (p) {
    case Prediction::Minus:
        return "-1";
    case Prediction::Plus:
        return "+1";
    case Prediction::Tie:
        return "tie";
    }
    return "?";
}

Prediction predict_from_probabilities(double p_minus, double p_plus) noexcept {
    const double diff = p_plus - p_minus;
    if (std::abs(diff) < tol::kTie) {
        return Prediction::Tie;
    }
    return diff > 0.0 ? Prediction::Plus : Prediction::Minus;
}

LabeledDataset::LabeledDataset(std::vector<LabeledPoint> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw DomainError("LabeledDataset: no points");
    }
    for (const auto& p : points_) {
        if (p.x.size() != points_.front().x.size() || p.x.empty()) {
            throw DimensionError("LabeledDataset: inconsistent feature dimension");
        }
        if (p.label != -1 && p.label != 1) {
            throw DomainError("LabeledDataset: label must be -1 or +1, got " + std::to_string(p.label));
        }
        require_unit(p.x, "LabeledDataset");
    }
}

double kernel(std::span<const double> x, std::span<const double> x2, std::size_t dataset_size) {
    if (dataset_size == 0) {
        throw DomainError("kernel: dataset size must be positive");
    }
    require_unit(x, "kernel");
    require_unit(x2, "kernel");
    return 1.0 - distance_squared(x, x2) / (4.0 * static_cast<double>(dataset_size));
}

double classical_score(const LabeledDataset& d, std::span<const double> x_test) {
    double s = 0.0;
    for (const auto& p : d.points()) {
        s += p.label * kernel(p.x, x_test, d.size());
    }
    return s;
}

Prediction classical_classify(const LabeledDataset& d, std::span<const double> x_test) {
    const double s = classical_score(d, x_test);
    if (std::abs(s) < tol::kTie) {
        return Prediction::Tie;
    }
    return s > 0.0 ? Prediction::Plus : Prediction::Minus;
}

ExactProbabilities quantum_exact_probabilities(const LabeledDataset& d, std::span<const double> x_test) {
    require_unit(x_test, "quantum_exact_probabilities");
    const double scale = 1.0 / (4.0 * static_cast<double>(d.size()));
    double minus = 0.0;
    double plus = 0.0;
    for (const auto& p : d.points()) {
        const double w = scale * sum_squared(x_test, p.x);
        (p.label < 0 ? minus : plus) += w;
    }
    const double accept = minus + plus;
    if (accept <= tol::kPostselect) {
        throw NumericalError("quantum_exact_probabilities: post-selection probability vanishes");
    }
    return {accept, minus / accept, plus / accept};
}

IdentitySides expectation_identity_check(const LabeledDataset& d, std::span<const double> x_test) {
    const ExactProbabilities q = quantum_exact_probabilities(d, x_test);
    return {classical_score(d, x_test), q.p_accept * (q.p_plus - q.p_minus)};
}

TripleAngles angles_from_triple(const Vec2& x0, const Vec2& x1, const Vec2& x_test) {
    require_unit(x0, "angles_from_triple");
    require_unit(x1, "angles_from_triple");
    require_unit(x_test, "angles_from_triple");
    // Coordinates relative to x0: (<x0, v>, x0 ^ v).
    auto angle = [&](const Vec2& v) {
        const double along = x0[0] * v[0] + x0[1] * v[1];
        const double across = x0[0] * v[1] - x0[1] * v[0];
        const double a = 2.0 * std::atan2(across, along);
        return a <= -2.0 * kPi ? a + 4.0 * kPi : a;
    };
    return {angle(x1), angle(x_test)};
}

double ratio_t(double gamma, double phi) {
    const double denom = std::cos((gamma - phi) / 4.0);
    if (std::abs(denom) < 1e-12) {
        throw NumericalError("ratio_t: cos((gamma - phi)/4) vanishes; test point is antipodal to x1");
    }
    const double num = std::cos(gamma / 4.0);
    return (num * num) / (denom * denom);
}

double omega_prime_from_t(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("omega_prime_from_t: t must be finite and non-negative");
    }
    const double s = std::sqrt(t);
    return 4.0 * std::atan((1.0 - s) / (1.0 + s));
}

double t_from_omega_prime(double omega_prime) {
    const double s = std::sin(omega_prime / 2.0);
    const double c = std::cos(omega_prime / 2.0);
    return (1.0 - s) * (1.0 - s) / (c * c);
}

IdentitySides tangent_half_angle_identity(double x) {
    const double c = std::cos(x);
    const double th = std::tan(x / 2.0);
    if (std::abs(1.0 + th) < 1e-12) {
        throw DomainError("tangent_half_angle_identity: tan(x/2) = -1");
    }
    if (std::abs(c) < 1e-12) {
        // cos x = 0 with sin x = 1 is removable: both sides tend to 0.
        if (std::abs(std::sin(x) - 1.0) < 1e-12) {
            return {(1.0 - th) / (1.0 + th), 0.0};
        }
        throw DomainError("tangent_half_angle_identity: cos x = 0");
    }
    return {(1.0 - th) / (1.0 + th), (1.0 - std::sin(x)) / c};
}

std::array<ComplexMatrix, 3> build_classifier_unitaries(double omega_prime) {
    const ComplexMatrix h = gates::hadamard();
    return {kron(h, gates::ry(-omega_prime / 2.0)), gates::cnot(), kron(h, gates::ry(omega_prime / 2.0))};
}

ClassifierOutcome outcome_from_state(const DensityBlock& two_qubit_state) {
    if (two_qubit_state.dim() != 4) {
        throw DimensionError("outcome_from_state: expected a two-qubit state");
    }
    // Basis index 2*ancilla + class.
    const double p00 = two_qubit_state.matrix()(0, 0).real();
    const double p01 = two_qubit_state.matrix()(1, 1).real();
    const double accept = p00 + p01;
    if (accept <= tol::kPostselect) {
        throw NumericalError("outcome_from_state: ancilla post-selection probability " + std::to_string(accept) +
                             " is below threshold");
    }
    const double minus = p00 / accept;
    const double plus = p01 / accept;
    return {accept, minus, plus, predict_from_probabilities(minus, plus)};
}

StateVector circuit_state(double omega_prime) {
    StateVector psi = basis_state(4, 0);
    for (const auto& u : build_classifier_unitaries(omega_prime)) {
        psi = matvec(u, psi);
    }
    return psi;
}

ClassifierOutcome run_circuit_reference(double omega_prime) {
    return outcome_from_state(DensityBlock::pure(circuit_state(omega_prime)));
}

WalkOutcome run_classifier_oqw(double omega_prime, double omega, std::size_t steps) {
    if (!(omega > 0.0 && omega <= 1.0)) {
        throw DomainError("run_classifier_oqw: omega must lie in (0, 1]");
    }
    if (steps == 0) {
        throw DomainError("run_classifier_oqw: need at least one step");
    }
    auto [u1, u2, u3] = build_classifier_unitaries(omega_prime);
    const TransitionOperatorSet walk = build_linear_chain(LinearChainSpec({u1, u2, u3}, omega));
    const OqwState start = OqwState::localized(4, 0, DensityBlock::pure(basis_state(4, 0)));
    const OqwState end = evolve(walk, start, steps);
    DensityBlock terminal = conditional_state(end, 3);
    ClassifierOutcome outcome = outcome_from_state(terminal);
    return {outcome, end.block(3).trace(), std::move(terminal)};
}

ClassifierInstance ClassifierInstance::from_triple(const Vec2& x0, const Vec2& x1, const Vec2& x_test) {
    const TripleAngles a = angles_from_triple(x0, x1, x_test);
    const double t = ratio_t(a.gamma, a.phi);
    return {x0, x1, x_test, a.phi, a.gamma, t, omega_prime_from_t(t)};
}

LabeledDataset ClassifierInstance::training_set() const {
    return LabeledDataset({{{x0[0], x0[1]}, -1}, {{x1[0], x1[1]}, +1}});
}

SampledOutcome sample_outcome(double terminal_probability, const ClassifierOutcome& outcome, std::size_t shots,
                              std::uint64_t seed) {
    Rng rng(seed);
    const double keep = terminal_probability * outcome.p_accept;
    SampledOutcome s{shots, 0, 0, 0, Prediction::Tie};
    for (std::size_t k = 0; k < shots; ++k) {
        if (uniform01(rng) >= keep) {
            continue;
        }
        ++s.accepted;
        if (uniform01(rng) < outcome.p_minus) {
            ++s.minus_counts;
        } else {
            ++s.plus_counts;
        }
    }
    if (s.minus_counts != s.plus_counts) {
        s.prediction = s.minus_counts > s.plus_counts ? Prediction::Minus : Prediction::Plus;
    }
    return s;
}

} // namespace oqwc
