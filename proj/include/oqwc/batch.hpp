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

#include "oqwc/classifier.hpp"
#include "oqwc/dataset.hpp"

namespace oqwc {

/// Everything computed for one sampled triple.
struct TripleResult {
    int true_label;
    Prediction classical;       // kernel-sum sign on {(x0, -1), (x1, +1)}
    Prediction exact;           // closed-form quantum probabilities
    double exact_p_accept;      // ancilla success of the general classifier
    ClassifierOutcome circuit;  // reduced circuit run through the walk
    double terminal_probability;
    bool degenerate; // singular ratio or failed post-selection; prediction is Tie
};

/// Walk parameters shared by every triple of a batch.
struct WalkSchedule {
    double omega;
    std::size_t steps;
};

TripleResult classify_triple(const PreparedDataset& data, const Triple& triple, const WalkSchedule& schedule);

/// Serial reference: results[i] belongs to triples[i].
std::vector<TripleResult> classify_triples_serial(const PreparedDataset& data, std::span<const Triple> triples,
                                                  const WalkSchedule& schedule);

/// OpenMP over triples. Output order and values match the serial version
/// exactly, whatever the thread count.
std::vector<TripleResult> classify_triples_parallel(const PreparedDataset& data, std::span<const Triple> triples,
                                                    const WalkSchedule& schedule);

} // namespace oqwc
