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

#include "oqwc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <string>

#include "oqwc/error.hpp"
#include "oqwc/linear_chain.hpp"
#include "oqwc/oqw.hpp"
#include "oqwc/random.hpp"
#include "oqwc/tolerances.hpp"

#ifndef OQWC_DEFAULT_DATA_DIR
#define OQWC_DEFAULT_DATA_DIR "data"
#endif

namespace oqwc {

namespace {

constexpr const char* kDataFile = "iris_sepal_2class.csv";

struct CsvPrecision {
    explicit CsvPrecision(std::ostream& os) : os_(os), flags_(os.flags()), prec_(os.precision()) {
        os_ << std::setprecision(12);
    }
    ~CsvPrecision() {
        os_.flags(flags_);
        os_.precision(prec_);
    }
    CsvPrecision(const CsvPrecision&) = delete;
    CsvPrecision& operator=(const CsvPrecision&) = delete;

    std::ostream& os_;
    std::ios::fmtflags flags_;
    std::streamsize prec_;
};

std::size_t steps_for(const ExperimentConfig& config, double omega) {
    return config.steps ? *config.steps : default_steps(config.nodes, omega);
}

OqwState chain_start(std::size_t nodes, std::size_t dim) {
    return OqwState::localized(nodes, 0, DensityBlock::pure(basis_state(dim, 0)));
}

double percent(std::size_t count, std::size_t total) {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(total);
}

} // namespace

std::optional<Command> parse_command(std::string_view name) {
    if (name == "curves") return Command::Curves;
    if (name == "evolution") return Command::Evolution;
    if (name == "classify-one") return Command::ClassifyOne;
    if (name == "iris-experiment") return Command::IrisExperiment;
    if (name == "steady-state") return Command::SteadyState;
    return std::nullopt;
}

std::vector<double> ExperimentConfig::omegas() const {
    if (!omega_list.empty()) {
        return omega_list;
    }
    if (command == Command::IrisExperiment) {
        return {1.0, 0.8, 0.5};
    }
    return {omega};
}

void ExperimentConfig::validate() const {
    // omega = 1 is only meaningful for the classifier pipeline, where the walk
    // is a deterministic conveyor to the last node.
    const bool allow_one = command == Command::IrisExperiment || command == Command::ClassifyOne;
    for (double w : omegas()) {
        const bool ok = w > 0.0 && (w < 1.0 || (allow_one && w == 1.0));
        if (!ok) {
            throw DomainError("omega " + std::to_string(w) + " is outside " + (allow_one ? "(0, 1]" : "(0, 1)"));
        }
    }
    if (nodes < 2) {
        throw DomainError("--nodes must be at least 2");
    }
    if ((command == Command::IrisExperiment || command == Command::ClassifyOne) && nodes != 4) {
        throw DomainError("the classifier walk has exactly 4 nodes");
    }
    if (command == Command::IrisExperiment && triples == 0) {
        throw DomainError("--triples must be at least 1");
    }
    if (stride == 0) {
        throw DomainError("--stride must be at least 1");
    }
    if (command == Command::ClassifyOne && steps && *steps == 0) {
        throw DomainError("--steps must be at least 1 for classify-one");
    }
    if (shots > 0 && repetitions == 0) {
        throw DomainError("sampling mode needs at least one repetition");
    }
}

std::filesystem::path resolve_data_path(const ExperimentConfig& config) {
    if (!config.data.empty()) {
        return config.data;
    }
    if (const char* dir = std::getenv("OQWC_DATA_DIR"); dir != nullptr && *dir != '\0') {
        return std::filesystem::path(dir) / kDataFile;
    }
    return std::filesystem::path(OQWC_DEFAULT_DATA_DIR) / kDataFile;
}

std::size_t default_steps(std::size_t nodes, double omega) {
    if (omega == 1.0) {
        return nodes - 1;
    }
    const std::size_t cap = 10 * nodes;
    // Occupations do not depend on the unitaries, so a scalar walk suffices.
    const std::vector<ComplexMatrix> scalars(nodes - 1, ComplexMatrix::identity(1));
    const TransitionOperatorSet walk = build_linear_chain(LinearChainSpec(scalars, omega));
    const ConvergenceResult conv = evolve_until_converged(walk, chain_start(nodes, 1), cap, tol::kConvergenceTv);
    std::size_t steps = conv.steps;
    if (omega > 0.5) {
        steps = std::max(steps, iterations_estimate(nodes, omega));
    }
    return std::clamp(steps, nodes - 1, cap);
}

std::vector<ComplexMatrix> circuit_layers(std::size_t nodes, double omega_prime) {
    const auto layers = build_classifier_unitaries(omega_prime);
    std::vector<ComplexMatrix> out;
    for (std::size_t i = 0; i + 1 < nodes; ++i) {
        out.push_back(layers[i % layers.size()]);
    }
    return out;
}

void cmd_curves(const ExperimentConfig& config, std::ostream& csv) {
    config.validate();
    CsvPrecision guard(csv);
    csv << "omega,n,p_terminal\n";
    for (double omega : config.omegas()) {
        const TransitionOperatorSet walk =
            build_linear_chain(LinearChainSpec(circuit_layers(config.nodes, config.omega_prime), omega));
        OqwState state = chain_start(config.nodes, 4);
        const std::size_t steps = steps_for(config, omega);
        for (std::size_t n = 0; n <= steps; ++n) {
            if (n > 0) {
                state = oqw_step(walk, state);
            }
            csv << omega << ',' << n << ',' << state.block(config.nodes - 1).trace() << '\n';
        }
    }
}

void cmd_evolution(const ExperimentConfig& config, std::ostream& csv) {
    config.validate();
    CsvPrecision guard(csv);
    const double omega = config.omega;
    const TransitionOperatorSet walk =
        build_linear_chain(LinearChainSpec(circuit_layers(config.nodes, config.omega_prime), omega));
    OqwState state = chain_start(config.nodes, 4);
    const std::size_t steps = steps_for(config, omega);
    csv << "n,node,probability\n";
    for (std::size_t n = 0; n <= steps; ++n) {
        if (n > 0) {
            state = oqw_step(walk, state);
        }
        if (n % config.stride != 0 && n != steps) {
            continue;
        }
        const std::vector<double> p = node_distribution(state);
        for (std::size_t i = 0; i < p.size(); ++i) {
            csv << n << ',' << i << ',' << p[i] << '\n';
        }
    }
}

ClassifyOneReport classify_one(const Vec2& x0, const Vec2& x1, const Vec2& x_test, double omega, std::size_t steps) {
    const ClassifierInstance inst = ClassifierInstance::from_triple(x0, x1, x_test);
    WalkOutcome walk = run_classifier_oqw(inst.omega_prime, omega, steps);
    const LabeledDataset training = inst.training_set();
    return {inst,
            std::move(walk),
            omega,
            steps,
            classical_classify(training, x_test),
            quantum_exact_probabilities(training, x_test)};
}

void write_classify_one(const ClassifyOneReport& r, std::ostream& human, std::ostream* csv) {
    const auto& in = r.instance;
    const auto& out = r.walk.outcome;
    {
        CsvPrecision guard(human);
        human << "x0 (label -1)        : (" << in.x0[0] << ", " << in.x0[1] << ")\n"
              << "x1 (label +1)        : (" << in.x1[0] << ", " << in.x1[1] << ")\n"
              << "x_test               : (" << in.x_test[0] << ", " << in.x_test[1] << ")\n"
              << "phi                  : " << in.phi << '\n'
              << "gamma                : " << in.gamma << '\n'
              << "t                    : " << in.t << '\n'
              << "omega'               : " << in.omega_prime << '\n'
              << "omega, steps         : " << r.omega << ", " << r.steps << '\n'
              << "P(node 3)            : " << r.walk.terminal_probability << '\n'
              << "p'_acc               : " << out.p_accept << '\n'
              << "P'(y=|0>) [label -1] : " << out.p_minus << '\n'
              << "P'(y=|1>) [label +1] : " << out.p_plus << '\n'
              << "quantum prediction   : " << to_string(out.prediction) << '\n'
              << "classical prediction : " << to_string(r.classical) << '\n';
        if (out.prediction == Prediction::Tie) {
            human << "note                 : class probabilities are tied (t = 1)\n";
        }
    }
    if (csv != nullptr) {
        CsvPrecision guard(*csv);
        *csv << "phi,gamma,t,omega_prime,omega,steps,p_terminal,p_accept,p_minus,p_plus,prediction,classical\n"
             << in.phi << ',' << in.gamma << ',' << in.t << ',' << in.omega_prime << ',' << r.omega << ','
             << r.steps << ',' << r.walk.terminal_probability << ',' << out.p_accept << ',' << out.p_minus << ','
             << out.p_plus << ',' << to_string(out.prediction) << ',' << to_string(r.classical) << '\n';
    }
}

void cmd_classify_one(const ExperimentConfig& config, std::ostream& human, std::ostream* csv) {
    config.validate();
    Vec2 x0, x1, xt;
    if (config.indices) {
        const PreparedDataset data = standardize_normalize(load_csv(resolve_data_path(config)));
        const auto [a, b, c] = *config.indices;
        for (std::size_t idx : {a, b, c}) {
            if (idx >= data.points.size()) {
                throw DomainError("--indices: row " + std::to_string(idx) + " out of range");
            }
        }
        x0 = data.points[a].x;
        x1 = data.points[b].x;
        xt = data.points[c].x;
    } else if (config.x0 && config.x1 && config.x_test) {
        x0 = *config.x0;
        x1 = *config.x1;
        xt = *config.x_test;
    } else {
        throw DomainError("classify-one needs --x0, --x1 and --xtest, or --indices");
    }
    const double omega = config.omegas().front();
    write_classify_one(classify_one(x0, x1, xt, omega, steps_for(config, omega)), human, csv);
}

ResultsRow score(std::span<const TripleResult> results, double omega, std::size_t steps) {
    std::size_t correct = 0, ties = 0, wrong = 0;
    std::size_t true_minus = 0, true_plus = 0, err_1_given_2 = 0, err_2_given_1 = 0;
    double terminal = 0.0, accept = 0.0;
    std::vector<double> repetitions;
    std::size_t usable = 0;
    for (const auto& r : results) {
        (r.true_label < 0 ? true_minus : true_plus) += 1;
        const Prediction p = r.circuit.prediction;
        if (p == Prediction::Tie) {
            ++ties;
        } else if (static_cast<int>(p) == r.true_label) {
            ++correct;
        } else {
            ++wrong;
            (r.true_label > 0 ? err_1_given_2 : err_2_given_1) += 1;
        }
        if (!r.degenerate) {
            ++usable;
            terminal += r.terminal_probability;
            accept += r.circuit.p_accept;
            repetitions.push_back(omega < 1.0 ? expected_repetitions(4, omega, r.circuit.p_accept)
                                              : 1.0 / r.circuit.p_accept);
        }
    }
    const double u = usable == 0 ? 1.0 : static_cast<double>(usable);
    // 1/p is heavy-tailed over triples, so report the median.
    double median = 0.0;
    if (!repetitions.empty()) {
        const auto mid = repetitions.begin() + static_cast<std::ptrdiff_t>(repetitions.size() / 2);
        std::nth_element(repetitions.begin(), mid, repetitions.end());
        median = *mid;
    }
    return {omega,
            steps,
            results.size(),
            percent(correct, results.size()),
            percent(err_1_given_2, true_plus),
            percent(err_2_given_1, true_minus),
            percent(wrong, results.size()),
            percent(ties, results.size()),
            terminal / u,
            accept / u,
            median};
}

IrisExperimentResult run_iris_experiment(const PreparedDataset& data, const ExperimentConfig& config) {
    config.validate();
    const std::vector<Triple> triples = sample_triples(data, config.triples, config.seed);
    IrisExperimentResult result;
    for (double omega : config.omegas()) {
        const std::size_t steps = steps_for(config, omega);
        const std::vector<TripleResult> exact = classify_triples_parallel(data, triples, {omega, steps});
        if (config.shots == 0) {
            result.rows.push_back(score(exact, omega, steps));
            std::vector<Prediction> preds;
            preds.reserve(exact.size());
            for (const auto& r : exact) {
                preds.push_back(r.circuit.prediction);
            }
            result.predictions.push_back(std::move(preds));
            continue;
        }

        // Sampling mode: replace each exact prediction by a shot-based one and
        // average the table over independent repetitions.
        ResultsRow mean{};
        std::vector<Prediction> first;
        for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
            std::vector<TripleResult> sampled = exact;
            for (std::size_t i = 0; i < sampled.size(); ++i) {
                if (sampled[i].degenerate) {
                    continue;
                }
                const std::uint64_t stream = rep * sampled.size() + i;
                sampled[i].circuit.prediction = sample_outcome(sampled[i].terminal_probability, sampled[i].circuit,
                                                               config.shots, derive_seed(config.seed, stream))
                                                    .prediction;
            }
            const ResultsRow row = score(sampled, omega, steps);
            mean.p_succ += row.p_succ;
            mean.p_err_1_given_2 += row.p_err_1_given_2;
            mean.p_err_2_given_1 += row.p_err_2_given_1;
            mean.p_err_total += row.p_err_total;
            mean.tie_rate += row.tie_rate;
            mean.mean_terminal_probability = row.mean_terminal_probability;
            mean.mean_p_accept = row.mean_p_accept;
            mean.median_repetitions = row.median_repetitions;
            if (rep == 0) {
                for (const auto& r : sampled) {
                    first.push_back(r.circuit.prediction);
                }
            }
        }
        const double reps = static_cast<double>(config.repetitions);
        mean.omega = omega;
        mean.steps = steps;
        mean.triples = triples.size();
        mean.p_succ /= reps;
        mean.p_err_1_given_2 /= reps;
        mean.p_err_2_given_1 /= reps;
        mean.p_err_total /= reps;
        mean.tie_rate /= reps;
        result.rows.push_back(mean);
        result.predictions.push_back(std::move(first));
    }
    return result;
}

void write_results_table(const IrisExperimentResult& result, std::ostream& csv) {
    CsvPrecision guard(csv);
    csv << "omega,steps,triples,p_succ,p_err_1_given_2,p_err_2_given_1,p_err_total,tie_rate,"
           "mean_p_terminal,mean_p_accept,median_repetitions\n";
    for (const auto& r : result.rows) {
        csv << r.omega << ',' << r.steps << ',' << r.triples << ',' << r.p_succ << ',' << r.p_err_1_given_2 << ','
            << r.p_err_2_given_1 << ',' << r.p_err_total << ',' << r.tie_rate << ',' << r.mean_terminal_probability
            << ',' << r.mean_p_accept << ',' << r.median_repetitions << '\n';
    }
}

void cmd_iris_experiment(const ExperimentConfig& config, std::ostream& csv) {
    config.validate();
    const PreparedDataset data = standardize_normalize(load_csv(resolve_data_path(config)));
    write_results_table(run_iris_experiment(data, config), csv);
}

std::optional<double> cmd_steady_state(const ExperimentConfig& config, std::ostream& csv, std::ostream& diag) {
    config.validate();
    const SteadyState ss = steady_state(config.nodes, config.omega);
    std::vector<double> empirical;
    std::optional<double> tv;
    if (config.verify) {
        const std::size_t steps = 10 * config.nodes;
        const TransitionOperatorSet walk =
            build_linear_chain(LinearChainSpec(circuit_layers(config.nodes, config.omega_prime), config.omega));
        empirical = node_distribution(evolve(walk, chain_start(config.nodes, 4), steps));
        tv = total_variation(ss.pi, empirical);
        diag << "steps=" << steps << " tv_distance=" << std::setprecision(6) << *tv << '\n';
    }
    CsvPrecision guard(csv);
    csv << (config.verify ? "node,pi,empirical\n" : "node,pi\n");
    for (std::size_t i = 0; i < ss.pi.size(); ++i) {
        csv << i << ',' << ss.pi[i];
        if (config.verify) {
            csv << ',' << empirical[i];
        }
        csv << '\n';
    }
    return tv;
}

} // namespace oqwc
