// Copyright 2026 The orthohot Authors
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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orthohot {

/// Exact rational scalar. All geometry in exact mode runs on this type;
/// inputs are finite decimals, so parsing is always exact.
using Rat = mpq_class;

/// Parses "42", "-3.25", "6.02e4" or "p/q" into an exact rational.
/// Throws std::invalid_argument on malformed text.
Rat rat_from_text(std::string_view text);

/// Canonical fraction rendering: "5", "-7/2".
std::string rat_to_string(const Rat& v);

/// Exact text that rat_from_text reproduces bit-for-bit: a finite decimal
/// when the denominator divides a power of ten, otherwise "p/q".
std::string rat_to_round_trip_text(const Rat& v);

/// Decimal rendering for humans; exact when terminating, otherwise rounded
/// to max_frac_digits fractional digits.
std::string rat_to_decimal(const Rat& v, int max_frac_digits = 12);

double rat_to_double(const Rat& v);

/// Uniform scalar interface so algorithm templates can run on exact
/// rationals or on plain doubles (the benchmark mode).
template <class R>
struct Num;

template <>
struct Num<Rat> {
  static constexpr bool exact = true;
  static Rat from_text(std::string_view s) { return rat_from_text(s); }
  static double to_double(const Rat& v) { return rat_to_double(v); }
  static std::string to_text(const Rat& v) { return rat_to_round_trip_text(v); }
  static std::string to_decimal(const Rat& v) { return rat_to_decimal(v); }
};

template <>
struct Num<double> {
  static constexpr bool exact = false;
  static double from_text(std::string_view s);
  static double to_double(double v) { return v; }
  static std::string to_text(double v);  // %.17g, round-trips through strtod
  static std::string to_decimal(double v) { return to_text(v); }
};

}  // namespace orthohot
