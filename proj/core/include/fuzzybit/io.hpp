// Copyright 2026 The fuzzybit Authors
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

// Text formats. Qubit state files hold one line `x y z`; Bloch-matrix files
// hold four rows of four reals whose first entry is exactly 1. Parsing is
// strict: stray tokens, missing values and trailing garbage are ParseErrors.

#include <filesystem>
#include <string>
#include <string_view>

#include "fuzzybit/qubit.hpp"
#include "fuzzybit/twoqubit.hpp"

namespace fuzzybit {

/// A single real; the whole token must be consumed.
double parse_real(std::string_view text);
/// `x,y,z`.
Vector3 parse_vector3(std::string_view text);
/// `a0;a1,a2,a3`.
Observable2 parse_observable(std::string_view text);

QubitState parse_qubit_state(std::string_view text);
BlochMatrix parse_bloch_matrix(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// `x y z\n` with round-trip precision.
std::string format_qubit_state(const QubitState& s, int significant_digits = 17);
/// Four rows, entries separated by single spaces.
std::string format_bloch_matrix(const BlochMatrix& bm, int significant_digits = 17);

}  // namespace fuzzybit
