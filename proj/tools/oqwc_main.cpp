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

// oqwc: open-quantum-walk classifier experiments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "oqwc/error.hpp"
#include "oqwc/harness.hpp"

namespace {

constexpr int kExitBadArguments = 2;
constexpr int kExitDataError = 3;
constexpr int kExitNumerical = 4;

oqwc::Vec2 parse_pair(const std::string& text, const char* flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw oqwc::DomainError(std::string(flag) + " expects two comma-separated numbers");
    }
    try {
        std::size_t used0 = 0, used1 = 0;
        const std::string a = text.substr(0, comma);
        const std::string b = text.substr(comma + 1);
        const double v0 = std::stod(a, &used0);
        const double v1 = std::stod(b, &used1);
        if (used0 != a.size() || used1 != b.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return {v0, v1};
    } catch (const std::logic_error&) {
        throw oqwc::DomainError(std::string(flag) + ": cannot parse '" + text + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Open quantum walk simulations of a distance-based quantum classifier"};

    std::string command;
    oqwc::ExperimentConfig config;
    std::size_t steps = 0;
    std::string x0, x1, xtest;
    std::vector<std::size_t> indices;

    app.add_option("command", command, "curves | evolution | classify-one | iris-experiment | steady-state")
        ->required()
        ->check(CLI::IsMember({"curves", "evolution", "classify-one", "iris-experiment", "steady-state"}));
    app.add_option("--omega", config.omega, "hop-right probability");
    app.add_option("--omega-list", config.omega_list, "comma-separated omegas")->delimiter(',');
    auto* steps_opt = app.add_option("--steps", steps, "walk steps (default: convergence estimate)");
    app.add_option("--nodes", config.nodes, "chain length");
    app.add_option("--triples", config.triples, "classification triples");
    app.add_option("--seed", config.seed, "sampling seed");
    app.add_option("--shots", config.shots, "shots per triple, 0 = exact probabilities");
    app.add_option("--repetitions", config.repetitions, "repetitions of the sampled experiment");
    app.add_option("--data", config.data, "iris CSV (sepal_length,sepal_width,species)");
    app.add_option("--out", config.output, "CSV output path (default: stdout)");
    app.add_flag("--verify", config.verify, "steady-state: compare with a simulated walk");
    app.add_option("--omega-prime", config.omega_prime, "circuit angle for curves/evolution");
    app.add_option("--stride", config.stride, "evolution: emit every k-th step");
    app.add_option("--x0", x0, "classify-one: label -1 point 'a,b'");
    app.add_option("--x1", x1, "classify-one: label +1 point 'a,b'");
    app.add_option("--xtest", xtest, "classify-one: test point 'a,b'");
    app.add_option("--indices", indices, "classify-one: three 0-based data rows x0,x1,xtest")
        ->delimiter(',')
        ->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        config.command = *oqwc::parse_command(command);
        if (steps_opt->count() > 0) {
            config.steps = steps;
        }
        if (!x0.empty()) config.x0 = parse_pair(x0, "--x0");
        if (!x1.empty()) config.x1 = parse_pair(x1, "--x1");
        if (!xtest.empty()) config.x_test = parse_pair(xtest, "--xtest");
        if (!indices.empty()) config.indices = std::array<std::size_t, 3>{indices[0], indices[1], indices[2]};
        config.validate();

        std::unique_ptr<std::ofstream> file;
        if (!config.output.empty()) {
            file = std::make_unique<std::ofstream>(config.output);
            if (!*file) {
                std::cerr << "error: cannot write " << config.output << '\n';
                return kExitDataError;
            }
        }
        std::ostream& csv = file ? static_cast<std::ostream&>(*file) : std::cout;

        switch (config.command) {
        case oqwc::Command::Curves:
            oqwc::cmd_curves(config, csv);
            break;
        case oqwc::Command::Evolution:
            oqwc::cmd_evolution(config, csv);
            break;
        case oqwc::Command::ClassifyOne:
            oqwc::cmd_classify_one(config, std::cout, file.get());
            break;
        case oqwc::Command::IrisExperiment:
            oqwc::cmd_iris_experiment(config, csv);
            break;
        case oqwc::Command::SteadyState:
            oqwc::cmd_steady_state(config, csv, std::cerr);
            break;
        }
    } catch (const oqwc::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const oqwc::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    }
    return 0;
}
