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
#include <string>
#include <string_view>
#include <vector>

#include "oqwc/classifier.hpp"

namespace oqwc {

struct RawRow {
    std::vector<double> features; // file column order
    std::string species;
    std::size_t line; // 1-based line in the source file
};

struct RawDataset {
    std::vector<RawRow> rows;
};

/// Header `sepal_length,sepal_width,species`; species must be setosa or
/// versicolor. Throws DataError (with the line number) on any violation.
RawDataset parse_csv(std::istream& in, std::string_view source = "<stream>");
RawDataset load_csv(const std::filesystem::path& path);

/// setosa -> -1, versicolor -> +1; DataError otherwise.
int label_for_species(std::string_view species);

struct PreparedPoint {
    Vec2 x;
    int label;
    std::size_t index; // row position in the raw dataset
};

struct PreparedDataset {
    std::vector<PreparedPoint> points;
    std::vector<Vec2> standardized; // z-scores before normalization
    Vec2 mean;
    Vec2 stddev; // population convention

    LabeledDataset as_labeled() const;
};

/// Output vectors are (sepal width, sepal length): raw column 1 first, then
/// column 0.
inline constexpr std::array<std::size_t, 2> kIrisFeatureOrder{1, 0};

/// Per-column z-scoring (population std) over all rows, then each row scaled
/// to unit Euclidean norm. Throws DataError for fewer than two rows, a
/// constant column or a row that standardizes to the origin.
PreparedDataset standardize_normalize(const RawDataset& raw,
                                      std::array<std::size_t, 2> columns = kIrisFeatureOrder);

/// Indices into PreparedDataset::points.
struct Triple {
    std::size_t x0;   // label -1
    std::size_t x1;   // label +1
    std::size_t test; // any other point
};

/// x0 uniform over label -1 points, x1 uniform over label +1 points, test
/// uniform over the remaining points. Deterministic in `seed`.
std::vector<Triple> sample_triples(const PreparedDataset& prepared, std::size_t count, std::uint64_t seed);

} // namespace oqwc
