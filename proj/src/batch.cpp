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

#include "oqwc/batch.hpp"

#include <exception>

#include "oqwc/error.hpp"

namespace oqwc {

namespace {

void check_schedule(const WalkSchedule& s) {
    if (!(s.omega > 0.0 && s.omega <= 1.0)) {
        throw DomainError("classify_triples: omega must lie in (0, 1]");
    }
    if (s.steps == 0) {
        throw DomainError("classify_triples: need at least one step");
    }
}

} // namespace

TripleResult classify_triple(const PreparedDataset& data, const Triple& triple, const WalkSchedule& schedule) {
    const Vec2& x0 = data.points.at(triple.x0).x;
    const Vec2& x1 = data.points.at(triple.x1).x;
    const PreparedPoint& test = data.points.at(triple.test);

    TripleResult r{};
    r.true_label = test.label;
    r.circuit.prediction = Prediction::Tie;

    const LabeledDataset training({{{x0[0], x0[1]}, -1}, {{x1[0], x1[1]}, +1}});
    const std::span<const double> xt(test.x);
    r.classical = classical_classify(training, xt);
    try {
        const ExactProbabilities exact = quantum_exact_probabilities(training, xt);
        r.exact = exact.prediction();
        r.exact_p_accept = exact.p_accept;

        const ClassifierInstance inst = ClassifierInstance::from_triple(x0, x1, test.x);
        const WalkOutcome walk = run_classifier_oqw(inst.omega_prime, schedule.omega, schedule.steps);
        r.circuit = walk.outcome;
        r.terminal_probability = walk.terminal_probability;
    } catch (const NumericalError&) {
        r.degenerate = true;
        r.circuit.prediction = Prediction::Tie;
    }
    return r;
}

std::vector<TripleResult> classify_triples_serial(const PreparedDataset& data, std::span<const Triple> triples,
                                                  const WalkSchedule& schedule) {
    check_schedule(schedule);
    std::vector<TripleResult> out;
    out.reserve(triples.size());
    for (const Triple& t : triples) {
        out.push_back(classify_triple(data, t, schedule));
    }
    return out;
}

std::vector<TripleResult> classify_triples_parallel(const PreparedDataset& data, std::span<const Triple> triples,
                                                    const WalkSchedule& schedule) {
    check_schedule(schedule);
    std::vector<TripleResult> out(triples.size());
    std::exception_ptr failure;
    const auto n = static_cast<std::ptrdiff_t>(triples.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = classify_triple(data, triples[static_cast<std::size_t>(i)], schedule);
        } catch (...) {
#pragma omp critical(oqwc_batch_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

} // namespace oqwc
