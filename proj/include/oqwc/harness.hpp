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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oqwc/batch.hpp"
#include "oqwc/classifier.hpp"
#include "oqwc/complex_matrix.hpp"
#include "oqwc/dataset.hpp"

namespace oqwc {

enum class Command { Curves, Evolution, ClassifyOne, IrisExperiment, SteadyState };

std::optional<Command> parse_command(std::string_view name);

struct ExperimentConfig {
    Command command = Command::SteadyState;
    double omega = 0.7;
    std::vector<double> omega_list; // overrides `omega` where a command sweeps
    std::optional<std::size_t> steps;
    std::size_t nodes = 4;
    std::size_t triples = 2000;
    std::uint64_t seed = 42;
    std::size_t shots = 0; // 0 = exact probabilities
    std::size_t repetitions = 10; // sampling mode only
    std::filesystem::path data;
    std::filesystem::path output;
    bool verify = false;
    double omega_prime = 0.0;
    std::size_t stride = 2;
    std::optional<Vec2> x0, x1, x_test;
    std::optional<std::array<std::size_t, 3>> indices; // 0-based rows of the data file

    /// Throws DomainError on out-of-range values for `command`.
    void validate() const;

    std::vector<double> omegas() const;
};

/// --data, then $OQWC_DATA_DIR/iris_sepal_2class.csv, then the bundled file.
std::filesystem::path resolve_data_path(const ExperimentConfig& config);

/// Steps used when none are requested: N - 1 for omega = 1, otherwise the
/// larger of the analytic estimate (omega > 1/2) and the total-variation
/// convergence point, never more than 10 N.
std::size_t default_steps(std::size_t nodes, double omega);

/// nodes - 1 circuit layers, cycling through the classifier unitaries.
std::vector<ComplexMatrix> circuit_layers(std::size_t nodes, double omega_prime);

/// CSV `omega,n,p_terminal` for n = 0..steps.
void cmd_curves(const ExperimentConfig& config, std::ostream& csv);

/// CSV `n,node,probability` for n = 0, stride, 2 stride, ..., steps.
void cmd_evolution(const ExperimentConfig& config, std::ostream& csv);

struct ClassifyOneReport {
    ClassifierInstance instance;
    WalkOutcome walk;
    double omega;
    std::size_t steps;
    Prediction classical;
    ExactProbabilities exact;
};

ClassifyOneReport classify_one(const Vec2& x0, const Vec2& x1, const Vec2& x_test, double omega, std::size_t steps);

void write_classify_one(const ClassifyOneReport& report, std::ostream& human, std::ostream* csv);

void cmd_classify_one(const ExperimentConfig& config, std::ostream& human, std::ostream* csv);

/// One row of the classification table. Rates are percentages. Class 1 is
/// label -1 (setosa), class 2 is label +1 (versicolor); error cells are
/// conditional on the true class, p_err_total is unconditional, and ties
/// (including degenerate triples) count as failures.
struct ResultsRow {
    double omega;
    std::size_t steps;
    std::size_t triples;
    double p_succ;
    double p_err_1_given_2;
    double p_err_2_given_1;
    double p_err_total;
    double tie_rate;
    double mean_terminal_probability;
    double mean_p_accept;
    double median_repetitions; // per-triple 1/(pi_{N-1} p'_acc)
};

struct IrisExperimentResult {
    std::vector<ResultsRow> rows;
    /// Per omega, the circuit prediction of every triple (first repetition in
    /// sampling mode).
    std::vector<std::vector<Prediction>> predictions;
};

ResultsRow score(std::span<const TripleResult> results, double omega, std::size_t steps);

IrisExperimentResult run_iris_experiment(const PreparedDataset& data, const ExperimentConfig& config);

void write_results_table(const IrisExperimentResult& result, std::ostream& csv);

void cmd_iris_experiment(const ExperimentConfig& config, std::ostream& csv);

/// CSV `node,pi` (plus `empirical` with --verify). The verify summary goes to
/// `diag`.
/// Returns the total variation distance when verifying.
std::optional<double> cmd_steady_state(const ExperimentConfig& config, std::ostream& csv, std::ostream& diag);

} // namespace oqwc
