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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oqwc/classifier.hpp"
#include "oqwc/error.hpp"
#include "support/random_quantum.hpp"
#include "support/state_vector_oracle.hpp"

using namespace oqwc;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 random_vec2(std::mt19937_64& rng) {
    const auto v = testing::random_unit_vector(2, rng);
    return {v[0], v[1]};
}

double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

double sum_norm2(const Vec2& a, const Vec2& b) {
    return (a[0] + b[0]) * (a[0] + b[0]) + (a[1] + b[1]) * (a[1] + b[1]);
}

LabeledDataset random_dataset(std::size_t m, std::size_t dim, std::mt19937_64& rng, bool balanced) {
    std::vector<LabeledPoint> pts;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < m; ++k) {
        const int label = balanced ? (k % 2 == 0 ? -1 : 1) : (coin(rng) ? 1 : -1);
        pts.push_back({testing::random_unit_vector(dim, rng), label});
    }
    return LabeledDataset(std::move(pts));
}

} // namespace

TEST_CASE("kernel values") {
    const std::vector<double> e0{1.0, 0.0}, e1{0.0, 1.0}, neg{-1.0, 0.0};
    CHECK(kernel(e0, e0, 7) == 1.0);
    CHECK_THAT(kernel(e0, neg, 1), WithinAbs(0.0, 1e-15));
    CHECK_THAT(kernel(e0, e1, 2), WithinAbs(0.75, 1e-15));
    CHECK_THROWS_AS(kernel(std::vector<double>{1.0, 1.0}, e0, 2), DomainError);
    CHECK_THROWS_AS(kernel(e0, e0, 0), DomainError);

    std::mt19937_64 rng(1);
    for (int k = 0; k < 100; ++k) {
        const auto a = testing::random_unit_vector(3, rng);
        const auto b = testing::random_unit_vector(3, rng);
        const std::size_t m = 1 + k % 5;
        const double v = kernel(a, b, m);
        CHECK(v >= 1.0 - 1.0 / static_cast<double>(m) - 1e-15);
        CHECK(v <= 1.0 + 1e-15);
    }
}

TEST_CASE("classical classifier") {
    const LabeledDataset d({{{1.0, 0.0}, +1}, {{0.0, 1.0}, -1}});
    CHECK_THAT(classical_score(d, std::vector<double>{1.0, 0.0}), WithinAbs(0.25, 1e-15));
    CHECK(classical_classify(d, std::vector<double>{1.0, 0.0}) == Prediction::Plus);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(classical_classify(d, std::vector<double>{r, r}) == Prediction::Tie);

    CHECK_THROWS_AS(LabeledDataset({}), DomainError);
    CHECK_THROWS_AS(LabeledDataset({{{1.0, 0.0}, 2}}), DomainError);
    CHECK_THROWS_AS(LabeledDataset({{{1.0, 0.0}, 1}, {{1.0}, -1}}), DimensionError);
    CHECK_THROWS_AS(LabeledDataset({{{0.6, 0.6}, 1}}), DomainError);
}

TEST_CASE("duplicating every point keeps the prediction") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 200; ++k) {
        const LabeledDataset d = random_dataset(2 + k % 3, 2, rng, true);
        std::vector<LabeledPoint> twice(d.points().begin(), d.points().end());
        twice.insert(twice.end(), d.points().begin(), d.points().end());
        const LabeledDataset d2(std::move(twice));
        const auto x = testing::random_unit_vector(2, rng);
        CHECK(classical_classify(d, x) == classical_classify(d2, x));
        CHECK(quantum_exact_probabilities(d, x).prediction() == quantum_exact_probabilities(d2, x).prediction());
    }
}

TEST_CASE("exact quantum probabilities") {
    const std::vector<double> e0{1.0, 0.0};
    const ExactProbabilities single = quantum_exact_probabilities(LabeledDataset({{e0, -1}}), e0);
    CHECK_THAT(single.p_minus, WithinAbs(1.0, 1e-15));
    CHECK_THAT(single.p_accept, WithinAbs(1.0, 1e-15));

    const LabeledDataset sym({{{1.0, 0.0}, -1}, {{1.0, 0.0}, +1}});
    const ExactProbabilities s = quantum_exact_probabilities(sym, std::vector<double>{0.6, 0.8});
    CHECK_THAT(s.p_minus, WithinAbs(0.5, 1e-15));
    CHECK(s.prediction() == Prediction::Tie);

    CHECK_THROWS_AS(quantum_exact_probabilities(LabeledDataset({{e0, -1}}), std::vector<double>{-1.0, 0.0}),
                    NumericalError);

    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const LabeledDataset d = random_dataset(1 + k % 4, 1 + (k / 4) % 4, rng, false);
        auto x = testing::random_unit_vector(d.feature_dim(), rng);
        // A one-dimensional test point can be antipodal to every training point.
        while (testing::state_vector_probabilities(d, x).p_accept < 1e-6) {
            x = testing::random_unit_vector(d.feature_dim(), rng);
        }
        const ExactProbabilities q = quantum_exact_probabilities(d, x);
        const ExactProbabilities b = testing::state_vector_probabilities(d, x);
        CHECK_THAT(q.p_accept, WithinAbs(b.p_accept, 1e-10));
        CHECK_THAT(q.p_minus, WithinAbs(b.p_minus, 1e-10));
        CHECK_THAT(q.p_plus, WithinAbs(b.p_plus, 1e-10));
        CHECK_THAT(q.p_minus + q.p_plus, WithinAbs(1.0, 1e-12));
        CHECK(q.p_accept > 0.0);
        CHECK(q.p_accept <= 1.0 + 1e-12);
    }
}

TEST_CASE("expectation identity") {
    const LabeledDataset d({{{1.0, 0.0}, +1}, {{0.0, 1.0}, -1}});
    const IdentitySides s = expectation_identity_check(d, std::vector<double>{1.0, 0.0});
    CHECK_THAT(s.lhs, WithinAbs(0.25, 1e-15));
    CHECK_THAT(s.rhs, WithinAbs(0.25, 1e-15));

    const LabeledDataset sym({{{0.0, 1.0}, -1}, {{0.0, 1.0}, +1}});
    const IdentitySides z = expectation_identity_check(sym, std::vector<double>{0.6, 0.8});
    CHECK_THAT(z.lhs, WithinAbs(0.0, 1e-15));
    CHECK_THAT(z.rhs, WithinAbs(0.0, 1e-15));

    std::mt19937_64 rng(4);
    for (int k = 0; k < 300; ++k) {
        const LabeledDataset balanced = random_dataset(2 * (1 + k % 3), 2 + k % 3, rng, true);
        const auto x = testing::random_unit_vector(balanced.feature_dim(), rng);
        const IdentitySides b = expectation_identity_check(balanced, x);
        CHECK_THAT(b.lhs, WithinAbs(b.rhs, 1e-10));

        // Unequal class counts shift the left side by (M+ - M-)(1 - 1/M).
        const LabeledDataset any = random_dataset(1 + k % 5, 2, rng, false);
        const auto y = testing::random_unit_vector(2, rng);
        double m_plus = 0.0, m_minus = 0.0;
        for (const auto& p : any.points()) {
            (p.label > 0 ? m_plus : m_minus) += 1.0;
        }
        const double m = static_cast<double>(any.size());
        const IdentitySides a = expectation_identity_check(any, y);
        CHECK_THAT(a.lhs - a.rhs, WithinAbs((m_plus - m_minus) * (1.0 - 1.0 / m), 1e-10));
    }
}

TEST_CASE("classical and quantum signs agree on two-point datasets") {
    std::mt19937_64 rng(5);
    int compared = 0;
    for (int k = 0; k < 1000; ++k) {
        const Vec2 x0 = random_vec2(rng), x1 = random_vec2(rng), xt = random_vec2(rng);
        const ClassifierInstance inst = ClassifierInstance::from_triple(x0, x1, xt);
        const Prediction classical = classical_classify(inst.training_set(), xt);
        const Prediction exact = quantum_exact_probabilities(inst.training_set(), xt).prediction();
        const Prediction circuit = run_circuit_reference(inst.omega_prime).prediction;
        if (classical != Prediction::Tie && exact != Prediction::Tie) {
            CHECK(classical == exact);
            ++compared;
        }
        if (classical != Prediction::Tie && circuit != Prediction::Tie) {
            CHECK(classical == circuit);
        }
        CHECK((classical_score(inst.training_set(), xt) > 0.0) ==
              (expectation_identity_check(inst.training_set(), xt).rhs > 0.0));
    }
    CHECK(compared > 990);
}

TEST_CASE("angles from a triple") {
    const Vec2 e0{1.0, 0.0}, e1{0.0, 1.0};
    const TripleAngles same = angles_from_triple(e0, e0, e0);
    CHECK(same.phi == 0.0);
    CHECK(same.gamma == 0.0);
    const TripleAngles a = angles_from_triple(e0, e1, e0);
    CHECK_THAT(a.phi, WithinAbs(kPi, 1e-15));
    CHECK_THAT(a.gamma, WithinAbs(0.0, 1e-15));

    std::mt19937_64 rng(6);
    for (int k = 0; k < 500; ++k) {
        const Vec2 x0 = random_vec2(rng), x1 = random_vec2(rng), xt = random_vec2(rng);
        const TripleAngles t = angles_from_triple(x0, x1, xt);
        CHECK(t.phi > -2.0 * kPi);
        CHECK(t.phi <= 2.0 * kPi);
        CHECK(t.gamma > -2.0 * kPi);
        CHECK(t.gamma <= 2.0 * kPi);
        CHECK_THAT(std::pow(std::cos(t.phi / 2.0), 2), WithinAbs(std::pow(dot(x0, x1), 2), 1e-12));
        CHECK_THAT(std::pow(std::cos(t.gamma / 2.0), 2), WithinAbs(std::pow(dot(x0, xt), 2), 1e-12));
        // R_y(phi)|0> reproduces x1 in the frame where x0 is |0>.
        const StateVector r = matvec(gates::ry(t.phi), basis_state(2, 0));
        CHECK_THAT(r[0].real(), WithinAbs(dot(x0, x1), 1e-12));
        CHECK_THAT(r[1].real(), WithinAbs(x0[0] * x1[1] - x0[1] * x1[0], 1e-12));
    }
    CHECK_THROWS_AS(angles_from_triple({1.0, 1.0}, e0, e0), DomainError);
}

TEST_CASE("worked iris triple") {
    const Vec2 x0{0.999807, 0.0196469};
    const Vec2 x1{-0.275974, 0.961165};
    const Vec2 xt{-0.194006, -0.981000};
    auto unit = [](Vec2 v) {
        const double n = std::hypot(v[0], v[1]);
        return Vec2{v[0] / n, v[1] / n};
    };
    const ClassifierInstance inst = ClassifierInstance::from_triple(unit(x0), unit(x1), unit(xt));
    CHECK_THAT(std::pow(std::cos(inst.phi / 2.0), 2), WithinAbs(std::pow(dot(unit(x0), unit(x1)), 2), 1e-9));
    CHECK_THAT(std::pow(std::cos(inst.gamma / 2.0), 2), WithinAbs(std::pow(dot(unit(x0), unit(xt)), 2), 1e-9));
    CHECK_THAT(inst.gamma, WithinAbs(-3.57138, 1e-4));

    // t is the ratio of the class weights |x~ + x0|^2 / |x~ + x1|^2.
    const double t_oracle = sum_norm2(unit(xt), unit(x0)) / sum_norm2(unit(xt), unit(x1));
    CHECK_THAT(inst.t, WithinAbs(t_oracle, 1e-9));
    CHECK_THAT(inst.t, WithinAbs(7.11117, 1e-4));
    CHECK_THAT(inst.omega_prime, WithinAbs(-1.70652, 1e-4));
    CHECK(run_circuit_reference(inst.omega_prime).prediction == Prediction::Minus);
    CHECK(classical_classify(inst.training_set(), inst.x_test) == Prediction::Minus);
}

TEST_CASE("ratio t matches the class weight ratio") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 1000; ++k) {
        const Vec2 x0 = random_vec2(rng), x1 = random_vec2(rng), xt = random_vec2(rng);
        const TripleAngles a = angles_from_triple(x0, x1, xt);
        const double oracle = sum_norm2(xt, x0) / sum_norm2(xt, x1);
        if (oracle < 1e6) {
            CHECK_THAT(ratio_t(a.gamma, a.phi), WithinAbs(oracle, 1e-9 * std::max(1.0, oracle)));
        }
    }
}

TEST_CASE("ratio t examples") {
    CHECK(ratio_t(0.0, 0.0) == 1.0);
    CHECK_THROWS_AS(ratio_t(0.0, 2.0 * kPi), NumericalError);
    CHECK_THROWS_AS(ratio_t(kPi, -kPi), NumericalError);
    CHECK_THAT(ratio_t(kPi, 0.0), WithinAbs(1.0, 1e-15));
}

TEST_CASE("omega prime from t") {
    CHECK(omega_prime_from_t(1.0) == 0.0);
    CHECK_THAT(omega_prime_from_t(0.0), WithinAbs(kPi, 1e-15));
    CHECK_THAT(t_from_omega_prime(kPi - 1e-6), WithinAbs(0.0, 1e-9));
    CHECK_THROWS_AS(omega_prime_from_t(-0.5), DomainError);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-kPi / 2.0, kPi / 2.0);
    for (int k = 0; k < 1000; ++k) {
        const double w = u(rng);
        CHECK_THAT(omega_prime_from_t(t_from_omega_prime(w)), WithinAbs(w, 1e-9));
    }
    std::uniform_real_distribution<double> ut(0.0, 50.0);
    for (int k = 0; k < 1000; ++k) {
        const double t = ut(rng);
        const double w = omega_prime_from_t(t);
        CHECK(w > -kPi);
        CHECK(w < kPi);
        CHECK_THAT(t_from_omega_prime(w), WithinAbs(t, 1e-9 * std::max(1.0, t)));
    }
}

TEST_CASE("tangent half-angle identity") {
    const IdentitySides zero = tangent_half_angle_identity(0.0);
    CHECK(zero.lhs == 1.0);
    CHECK(zero.rhs == 1.0);
    const IdentitySides top = tangent_half_angle_identity(kPi / 2.0);
    CHECK_THAT(top.lhs, WithinAbs(0.0, 1e-12));
    CHECK_THAT(top.rhs, WithinAbs(0.0, 1e-12));
    CHECK_THROWS_AS(tangent_half_angle_identity(-kPi / 2.0), DomainError);
    CHECK_THROWS_AS(tangent_half_angle_identity(3.0 * kPi / 2.0), DomainError);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-kPi / 2.0 + 0.01, kPi / 2.0 - 0.01);
    for (int k = 0; k < 10000; ++k) {
        const IdentitySides s = tangent_half_angle_identity(u(rng));
        REQUIRE(std::abs(s.lhs - s.rhs) <= 1e-12);
    }
}

TEST_CASE("classifier unitaries") {
    const auto zero = build_classifier_unitaries(0.0);
    const ComplexMatrix hi = kron(gates::hadamard(), gates::identity());
    CHECK(max_abs_diff(zero[0], hi) < 1e-15);
    CHECK(max_abs_diff(zero[2], hi) < 1e-15);
    CHECK(max_abs_diff(zero[1], gates::cnot()) == 0.0);

    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int k = 0; k < 200; ++k) {
        const double w = u(rng);
        for (const auto& m : build_classifier_unitaries(w)) {
            CHECK(is_unitary(m, 1e-12));
        }
        // Amplitudes of |00>, |01>, |10>, |11> as displayed for the final circuit state.
        const double s = std::sin(w / 2.0), c = std::cos(w / 2.0);
        const std::vector<double> expected{(1.0 - s) / 2.0, c / 2.0, (1.0 + s) / 2.0, -c / 2.0};
        const StateVector psi = circuit_state(w);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK_THAT(psi[i].real(), WithinAbs(expected[i], 1e-10));
            CHECK_THAT(psi[i].imag(), WithinAbs(0.0, 1e-10));
        }
    }
}

TEST_CASE("circuit reference outcome") {
    const ClassifierOutcome zero = run_circuit_reference(0.0);
    CHECK_THAT(zero.p_accept, WithinAbs(0.5, 1e-15));
    CHECK(zero.prediction == Prediction::Tie);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-kPi + 0.1, kPi - 0.1);
    for (int k = 0; k < 200; ++k) {
        const double w = u(rng);
        const ClassifierOutcome o = run_circuit_reference(w);
        CHECK_THAT(o.p_accept, WithinAbs((1.0 - std::sin(w / 2.0)) / 2.0, 1e-12));
        CHECK_THAT(o.p_minus + o.p_plus, WithinAbs(1.0, 1e-10));
        CHECK_THAT(o.p_minus / o.p_plus, WithinAbs(t_from_omega_prime(w), 1e-10 * std::max(1.0, o.p_minus / o.p_plus)));
    }
    CHECK_THROWS_AS(run_circuit_reference(kPi), NumericalError);
    CHECK_THROWS_AS(outcome_from_state(DensityBlock::pure(basis_state(2, 0))), DimensionError);
}

TEST_CASE("walk realisation of the circuit") {
    const WalkOutcome base = run_classifier_oqw(0.0, 0.7, 10);
    CHECK(base.outcome.prediction == Prediction::Tie);
    CHECK_THAT(base.terminal_probability, WithinAbs(0.5913793, 0.02));

    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-kPi + 0.1, kPi - 0.1);
    for (int k = 0; k < 50; ++k) {
        const double w = u(rng);
        const ClassifierOutcome ref = run_circuit_reference(w);
        const WalkOutcome a = run_classifier_oqw(w, 0.7, 10);
        const WalkOutcome b = run_classifier_oqw(w, 0.9, 5);
        CHECK(fidelity_pure(a.terminal_state, circuit_state(w)) >= 1.0 - 1e-9);
        CHECK_THAT(a.outcome.p_minus, WithinAbs(ref.p_minus, 1e-9));
        CHECK_THAT(a.outcome.p_accept, WithinAbs(ref.p_accept, 1e-9));
        CHECK_THAT(b.outcome.p_minus, WithinAbs(a.outcome.p_minus, 1e-9));
        for (double omega : {0.3, 0.5, 0.9, 1.0}) {
            const WalkOutcome c = run_classifier_oqw(w, omega, 3 + k % 5);
            CHECK_THAT(c.outcome.p_minus, WithinAbs(ref.p_minus, 1e-9));
            CHECK(c.outcome.prediction == ref.prediction);
        }
    }
    CHECK_THAT(run_classifier_oqw(0.3, 1.0, 3).terminal_probability, WithinAbs(1.0, 1e-14));
    CHECK_THROWS_AS(run_classifier_oqw(0.3, 0.7, 2), NumericalError);
    CHECK_THROWS_AS(run_classifier_oqw(0.3, 0.7, 0), DomainError);
    CHECK_THROWS_AS(run_classifier_oqw(0.3, 0.0, 5), DomainError);
}

TEST_CASE("walk prediction matches the classical rule on random triples") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 300; ++k) {
        const Vec2 x0 = random_vec2(rng), x1 = random_vec2(rng), xt = random_vec2(rng);
        const ClassifierInstance inst = ClassifierInstance::from_triple(x0, x1, xt);
        const Prediction walk = run_classifier_oqw(inst.omega_prime, 0.7, 3 + k % 8).outcome.prediction;
        const Prediction classical = classical_classify(inst.training_set(), std::vector<double>{xt[0], xt[1]});
        if (walk != Prediction::Tie && classical != Prediction::Tie) {
            CHECK(walk == classical);
        }
    }
}

TEST_CASE("nearest point sanity") {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 100; ++k) {
        const Vec2 x0 = random_vec2(rng), x1 = random_vec2(rng);
        if (std::abs(dot(x0, x1)) > 0.999) {
            continue;
        }
        CHECK(run_circuit_reference(ClassifierInstance::from_triple(x0, x1, x1).omega_prime).prediction ==
              Prediction::Plus);
        CHECK(run_circuit_reference(ClassifierInstance::from_triple(x0, x1, x0).omega_prime).prediction ==
              Prediction::Minus);
    }
}

TEST_CASE("shot sampling") {
    const ClassifierOutcome o{0.5, 0.8, 0.2, Prediction::Minus};
    const SampledOutcome a = sample_outcome(0.6, o, 20000, 99);
    const SampledOutcome b = sample_outcome(0.6, o, 20000, 99);
    CHECK(a.accepted == b.accepted);
    CHECK(a.minus_counts == b.minus_counts);
    CHECK(a.minus_counts + a.plus_counts == a.accepted);
    CHECK_THAT(static_cast<double>(a.accepted) / 20000.0, WithinAbs(0.3, 0.02));
    CHECK_THAT(static_cast<double>(a.minus_counts) / static_cast<double>(a.accepted), WithinAbs(0.8, 0.03));
    CHECK(a.prediction == Prediction::Minus);
    const SampledOutcome none = sample_outcome(0.0, o, 100, 1);
    CHECK(none.accepted == 0);
    CHECK(none.prediction == Prediction::Tie);
}
