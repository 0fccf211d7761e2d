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

#include "fuzzybit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "fuzzybit/error.hpp"
#include "fuzzybit/report.hpp"

namespace fuzzybit {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> nonblank_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!trim(line).empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("expected a number, got nothing");
  // from_chars rejects a leading '+', which is common in hand-written files.
  const std::string_view body = t.front() == '+' ? t.substr(1) : t;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    throw ParseError(fmt::format("'{}' is not a number", t));
  }
  return v;
}

Vector3 parse_vector3(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() != 3) throw ParseError(fmt::format("expected x,y,z but got '{}'", text));
  return {parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
}

Observable2 parse_observable(std::string_view text) {
  const auto parts = split(trim(text), ';');
  if (parts.size() != 2) throw ParseError(fmt::format("expected a0;a1,a2,a3 but got '{}'", text));
  return {parse_real(parts[0]), parse_vector3(parts[1])};
}

QubitState parse_qubit_state(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.size() != 1) throw ParseError("qubit state file must hold exactly one line 'x y z'");
  const auto t = tokens(lines[0]);
  if (t.size() != 3) throw ParseError("qubit state line must hold exactly three numbers");
  return QubitState::from_bloch({parse_real(t[0]), parse_real(t[1]), parse_real(t[2])});
}

BlochMatrix parse_bloch_matrix(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.size() != 4) {
    throw ParseError(fmt::format("Bloch matrix needs 4 rows, found {}", lines.size()));
  }
  Eigen::Matrix4d a;
  for (int i = 0; i < 4; ++i) {
    const auto t = tokens(lines[static_cast<std::size_t>(i)]);
    if (t.size() != 4) {
      throw ParseError(fmt::format("Bloch matrix row {} has {} entries, expected 4", i + 1, t.size()));
    }
    for (int j = 0; j < 4; ++j) a(i, j) = parse_real(t[static_cast<std::size_t>(j)]);
  }
  if (a(0, 0) != 1.0) throw ParseError("first entry of a Bloch matrix must be 1");
  return BlochMatrix::from_array(a);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot read '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write '{}'", path.string()));
  out << text;
}

std::string format_qubit_state(const QubitState& s, int digits) {
  const Vector3& v = s.bloch();
  return fmt::format("{} {} {}\n", format_number(v[0], digits), format_number(v[1], digits),
                     format_number(v[2], digits));
}

std::string format_bloch_matrix(const BlochMatrix& bm, int digits) {
  const Eigen::Matrix4d a = bm.array();
  std::string out;
  for (int i = 0; i < 4; ++i) {
    out += fmt::format("{} {} {} {}\n", format_number(a(i, 0), digits), format_number(a(i, 1), digits),
                       format_number(a(i, 2), digits), format_number(a(i, 3), digits));
  }
  return out;
}

}  // namespace fuzzybit
