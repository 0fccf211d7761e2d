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

#include "fuzzybit/borel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "fuzzybit/error.hpp"

namespace fuzzybit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_endpoint(std::string_view s) {
  s = trim(s);
  if (s == "inf" || s == "+inf") return kInf;
  if (s == "-inf") return -kInf;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    throw ParseError(fmt::format("bad Borel endpoint '{}'", s));
  }
  return v;
}

std::string format_endpoint(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return fmt::format("{}", v);
}

}  // namespace

BorelSet BorelSet::real_line() { return interval(-kInf, kInf); }

BorelSet BorelSet::interval(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo == kInf || hi == -kInf) {
    throw DomainError("interval endpoints out of range");
  }
  BorelSet s;
  if (lo < hi) s.intervals_.push_back({lo, hi});
  return s;
}

BorelSet BorelSet::point(double p) {
  if (!std::isfinite(p)) throw DomainError("Borel point must be finite");
  BorelSet s;
  s.points_.push_back(p);
  return s;
}

void BorelSet::normalize() {
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& iv : intervals_) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  intervals_ = std::move(merged);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  std::erase_if(points_, [this](double p) {
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [p](const Interval& iv) { return iv.lo <= p && p < iv.hi; });
  });
  // A point sitting at a left endpoint is already covered; a point at a right
  // endpoint stays isolated because [lo, hi] is not half-open.
}

BorelSet unite(const BorelSet& a, const BorelSet& b) {
  BorelSet out = a;
  out.intervals_.insert(out.intervals_.end(), b.intervals_.begin(), b.intervals_.end());
  out.points_.insert(out.points_.end(), b.points_.begin(), b.points_.end());
  out.normalize();
  return out;
}

BorelSet BorelSet::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty Borel-set expression");
  BorelSet out;
  std::size_t pos = 0;
  bool expect_term = true;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (!expect_term) {
      if (c != 'u' && c != '|' && c != 'U') {
        throw ParseError(fmt::format("expected 'u' or '|' at offset {} in '{}'", pos, text));
      }
      ++pos;
      expect_term = true;
      continue;
    }
    if (c == 'R') {
      out.intervals_.push_back({-kInf, kInf});
      ++pos;
    } else if (c == '[') {
      const auto close = text.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated interval, expected ')'");
      const auto body = text.substr(pos + 1, close - pos - 1);
      const auto comma = body.find(',');
      if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError(fmt::format("interval '[{})' needs exactly two endpoints", body));
      }
      const double lo = parse_endpoint(body.substr(0, comma));
      const double hi = parse_endpoint(body.substr(comma + 1));
      if (lo == kInf || hi == -kInf || !(lo <= hi)) {
        throw ParseError(fmt::format("interval '[{})' has lo > hi", body));
      }
      if (lo < hi) out.intervals_.push_back({lo, hi});
      pos = close + 1;
    } else if (c == '{') {
      const auto close = text.find('}', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated point list, expected '}'");
      auto body = trim(text.substr(pos + 1, close - pos - 1));
      while (!body.empty()) {
        const auto comma = body.find(',');
        const double p = parse_endpoint(body.substr(0, comma));
        if (!std::isfinite(p)) throw ParseError("Borel points must be finite");
        out.points_.push_back(p);
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
        if (trim(body).empty()) throw ParseError("trailing ',' in point list");
      }
      pos = close + 1;
    } else {
      throw ParseError(fmt::format("unexpected '{}' at offset {} in '{}'", c, pos, text));
    }
    expect_term = false;
  }
  if (expect_term) throw ParseError("Borel-set expression ends with a separator");
  out.normalize();
  return out;
}

bool BorelSet::contains(double x) const {
  for (const auto& iv : intervals_) {
    if (iv.lo <= x && x < iv.hi) return true;
  }
  return std::find(points_.begin(), points_.end(), x) != points_.end();
}

BorelSet BorelSet::complement() const {
  if (!points_.empty()) {
    throw DomainError("complement is only representable for sets without isolated points");
  }
  BorelSet out;
  double cursor = -kInf;
  for (const auto& iv : intervals_) {
    if (cursor < iv.lo) out.intervals_.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < kInf) out.intervals_.push_back({cursor, kInf});
  return out;
}

std::string BorelSet::to_string() const {
  if (is_empty()) return "{}";
  std::string out;
  for (const auto& iv : intervals_) {
    if (!out.empty()) out += 'u';
    out += fmt::format("[{},{})", format_endpoint(iv.lo), format_endpoint(iv.hi));
  }
  if (!points_.empty()) {
    if (!out.empty()) out += 'u';
    out += '{';
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (i) out += ',';
      out += format_endpoint(points_[i]);
    }
    out += '}';
  }
  return out;
}

std::size_t EigenSelection::selected_count() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

std::vector<double> distinct_eigenvalues(std::span<const double> eigenvalues,
                                         const Tolerances& tol) {
  std::vector<double> sorted(eigenvalues.begin(), eigenvalues.end());
  for (double v : sorted) {
    if (!std::isfinite(v)) throw DomainError("eigenvalues must be finite");
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  for (double v : sorted) {
    if (out.empty() || v - out.back() > tol.eigen_dedup) out.push_back(v);
  }
  return out;
}

EigenSelection classify(const BorelSet& e, std::span<const double> eigenvalues,
                        const Tolerances& tol) {
  EigenSelection sel;
  sel.eigenvalues = distinct_eigenvalues(eigenvalues, tol);
  sel.mask.reserve(sel.eigenvalues.size());
  for (double v : sel.eigenvalues) sel.mask.push_back(e.contains(v));
  return sel;
}

QubitClass qubit_class(const EigenSelection& sel) {
  if (sel.size() == 1) return sel.mask[0] ? QubitClass::Both : QubitClass::None;
  if (sel.size() != 2) {
    throw DomainError(fmt::format("qubit selection needs 1 or 2 eigenvalues, got {}", sel.size()));
  }
  // Ascending order: mask[0] is lambda_-, mask[1] is lambda_+.
  if (sel.mask[0] && sel.mask[1]) return QubitClass::Both;
  if (sel.mask[1]) return QubitClass::Plus;
  if (sel.mask[0]) return QubitClass::Minus;
  return QubitClass::None;
}

BorelType two_qubit_type(QubitClass a, QubitClass b) {
  const auto count = [](QubitClass c) {
    switch (c) {
      case QubitClass::None: return 0;
      case QubitClass::Both: return 2;
      default: return 1;
    }
  };
  const int ca = count(a);
  const int cb = count(b);
  if (ca == 0 || cb == 0) {
    switch (ca + cb) {
      case 0: return BorelType::NoEigenvalue;
      case 1: return BorelType::One;
      default: return BorelType::SameSubsystem;
    }
  }
  switch (ca + cb) {
    case 2: return BorelType::OneEach;
    case 3: return BorelType::Three;
    default: return BorelType::All;
  }
}

std::string_view to_string(QubitClass c) {
  switch (c) {
    case QubitClass::None: return "0";
    case QubitClass::Plus: return "+";
    case QubitClass::Minus: return "-";
    case QubitClass::Both: return "pm";
  }
  return "?";
}

QubitClass parse_qubit_class(std::string_view text) {
  if (text == "0") return QubitClass::None;
  if (text == "+") return QubitClass::Plus;
  if (text == "-") return QubitClass::Minus;
  if (text == "pm" || text == "*") return QubitClass::Both;
  throw ParseError(fmt::format("unknown qubit class '{}', expected 0, +, - or pm", text));
}

}  // namespace fuzzybit
