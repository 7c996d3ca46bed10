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

#include "oqwc/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include "oqwc/error.hpp"
#include "oqwc/random.hpp"

namespace oqwc {

namespace {

constexpr std::string_view kHeader = "sepal_length,sepal_width,species";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
    throw DataError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view field, std::string_view source, std::size_t line) {
    double v = 0.0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc{} || ptr != end || field.empty() || !std::isfinite(v)) {
        fail(source, line, "malformed number '" + std::string(field) + "'");
    }
    return v;
}

} // namespace

int label_for_species(std::string_view species) {
    if (species == "setosa") {
        return -1;
    }
    if (species == "versicolor") {
        return 1;
    }
    throw DataError("unknown species '" + std::string(species) + "' (expected setosa or versicolor)");
}

RawDataset parse_csv(std::istream& in, std::string_view source) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) {
        throw DataError(std::string(source) + ": empty file");
    }
    ++lineno;
    if (trim(line) != kHeader) {
        fail(source, lineno, "expected header '" + std::string(kHeader) + "'");
    }

    RawDataset raw;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(line);
        if (fields.size() != 3) {
            fail(source, lineno, "expected 3 fields, got " + std::to_string(fields.size()));
        }
        RawRow row{{parse_number(fields[0], source, lineno), parse_number(fields[1], source, lineno)},
                   std::string(fields[2]),
                   lineno};
        try {
            label_for_species(row.species);
        } catch (const DataError& e) {
            fail(source, lineno, e.what());
        }
        raw.rows.push_back(std::move(row));
    }
    if (raw.rows.empty()) {
        throw DataError(std::string(source) + ": no data rows");
    }
    return raw;
}

RawDataset load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open data file " + path.string());
    }
    return parse_csv(in, path.string());
}

LabeledDataset PreparedDataset::as_labeled() const {
    std::vector<LabeledPoint> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back({{p.x[0], p.x[1]}, p.label});
    }
    return LabeledDataset(std::move(out));
}

PreparedDataset standardize_normalize(const RawDataset& raw, std::array<std::size_t, 2> columns) {
    const std::size_t n = raw.rows.size();
    if (n < 2) {
        throw DataError("standardize_normalize: need at least two rows");
    }
    const std::size_t arity = raw.rows.front().features.size();
    for (const auto& r : raw.rows) {
        if (r.features.size() != arity) {
            throw DataError("standardize_normalize: inconsistent feature count at line " + std::to_string(r.line));
        }
    }
    if (columns[0] >= arity || columns[1] >= arity) {
        throw DataError("standardize_normalize: feature column out of range");
    }

    PreparedDataset out;
    for (std::size_t k = 0; k < 2; ++k) {
        double sum = 0.0;
        for (const auto& r : raw.rows) {
            sum += r.features[columns[k]];
        }
        const double mean = sum / static_cast<double>(n);
        double ss = 0.0;
        for (const auto& r : raw.rows) {
            const double d = r.features[columns[k]] - mean;
            ss += d * d;
        }
        const double sd = std::sqrt(ss / static_cast<double>(n));
        if (!(sd > 0.0)) {
            throw DataError("standardize_normalize: feature column " + std::to_string(columns[k]) +
                            " has zero variance");
        }
        out.mean[k] = mean;
        out.stddev[k] = sd;
    }

    out.points.reserve(n);
    out.standardized.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = raw.rows[i];
        const Vec2 z{(r.features[columns[0]] - out.mean[0]) / out.stddev[0],
                     (r.features[columns[1]] - out.mean[1]) / out.stddev[1]};
        const double len = std::hypot(z[0], z[1]);
        if (len == 0.0) {
            throw DataError("standardize_normalize: row at line " + std::to_string(r.line) +
                            " standardizes to the origin");
        }
        out.standardized.push_back(z);
        out.points.push_back({{z[0] / len, z[1] / len}, label_for_species(r.species), i});
    }
    return out;
}

std::vector<Triple> sample_triples(const PreparedDataset& prepared, std::size_t count, std::uint64_t seed) {
    if (count == 0) {
        throw DomainError("sample_triples: count must be positive");
    }
    std::vector<std::size_t> minus;
    std::vector<std::size_t> plus;
    for (std::size_t i = 0; i < prepared.points.size(); ++i) {
        (prepared.points[i].label < 0 ? minus : plus).push_back(i);
    }
    const std::size_t n = prepared.points.size();
    if (minus.empty() || plus.empty() || n < 3) {
        throw DataError("sample_triples: need both classes and at least three points");
    }

    Rng rng(seed);
    std::vector<Triple> triples;
    triples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t a = minus[uniform_index(rng, minus.size())];
        const std::size_t b = plus[uniform_index(rng, plus.size())];
        // Draw from the n - 2 remaining indices and step over a and b.
        std::size_t t = uniform_index(rng, n - 2);
        const std::size_t lo = std::min(a, b);
        const std::size_t hi = std::max(a, b);
        if (t >= lo) {
            ++t;
        }
        if (t >= hi) {
            ++t;
        }
        triples.push_back({a, b, t});
    }
    return triples;
}

} // namespace oqwc
