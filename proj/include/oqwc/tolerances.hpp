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

namespace oqwc::tol {

// Max-entry deviation of sum_i K_i^dagger K_i from the identity.
inline constexpr double kCptp = 1e-10;
inline constexpr double kHermitian = 1e-10;
// Smallest admissible eigenvalue is -kPsd.
inline constexpr double kPsd = 1e-9;
inline constexpr double kTrace = 1e-10;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kUnitNorm = 1e-10;

// Below this probability a conditional state is not formed.
inline constexpr double kPostselect = 1e-12;

// Class probabilities (or kernel sums) closer than this are reported as a tie.
inline constexpr double kTie = 1e-12;

// Successive node distributions closer than this (total variation) count as converged.
inline constexpr double kConvergenceTv = 1e-8;

} // namespace oqwc::tol
