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

#include "rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace orthohot {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

mpz_class pow10z(unsigned long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

Rat parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  std::string num(trim(text.substr(0, slash)));
  std::string den(trim(text.substr(slash + 1)));
  mpz_class n, d;
  try {
    n = mpz_class(num, 10);
    d = mpz_class(den, 10);
  } catch (const std::invalid_argument&) {
    bad_number(text);
  }
  if (d == 0) bad_number(text);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) bad_number(text);
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) bad_number(text);
    long e = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') bad_number(text);
      e = e * 10 + (s[i] - '0');
      if (e > 100000) bad_number(text);  // keeps 10^e bounded
    }
    exp10 = eneg ? -e : e;
  }
  if (i != s.size()) bad_number(text);

  mpz_class mant(digits.empty() ? "0" : digits, 10);
  long e = exp10 - frac_digits;
  Rat r;
  if (e >= 0) {
    r = Rat(mant * pow10z(static_cast<unsigned long>(e)));
  } else {
    r = Rat(mant, pow10z(static_cast<unsigned long>(-e)));
    r.canonicalize();
  }
  return negative ? Rat(-r) : r;
}

}  // namespace

Rat rat_from_text(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  if (s.find('/') != std::string_view::npos) return parse_fraction(s);
  return parse_decimal(s);
}

std::string rat_to_string(const Rat& v) { return v.get_str(); }

namespace {

// Splits the denominator into 2^a * 5^b * rest; rest == 1 means the value
// has a finite decimal expansion with max(a, b) fractional digits.
bool decimal_digits(const Rat& v, unsigned long& k) {
  mpz_class d = v.get_den();
  unsigned long a = 0, b = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    d /= 2;
    ++a;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    d /= 5;
    ++b;
  }
  k = a > b ? a : b;
  return d == 1;
}

std::string format_scaled(const mpz_class& scaled, bool negative, unsigned long k) {
  std::string digits = scaled.get_str();
  std::string out;
  if (k == 0) {
    out = digits;
  } else {
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (negative && out != "0") out.insert(out.begin(), '-');
  return out;
}

}  // namespace

std::string rat_to_round_trip_text(const Rat& v) {
  unsigned long k = 0;
  if (!decimal_digits(v, k)) return rat_to_string(v);
  mpz_class scaled = abs(v.get_num()) * (pow10z(k) / v.get_den());
  return format_scaled(scaled, sgn(v) < 0, k);
}

std::string rat_to_decimal(const Rat& v, int max_frac_digits) {
  unsigned long k = 0;
  if (decimal_digits(v, k)) {
    mpz_class scaled = abs(v.get_num()) * (pow10z(k) / v.get_den());
    return format_scaled(scaled, sgn(v) < 0, k);
  }
  // Non-terminating: round half away from zero at max_frac_digits.
  unsigned long d = static_cast<unsigned long>(max_frac_digits < 0 ? 0 : max_frac_digits);
  mpz_class num = abs(v.get_num()) * pow10z(d);
  mpz_class den = v.get_den();
  mpz_class q = (2 * num + den) / (2 * den);
  return format_scaled(q, sgn(v) < 0, d);
}

double rat_to_double(const Rat& v) { return v.get_d(); }

double Num<double>::from_text(std::string_view s) {
  std::string_view t = trim(s);
  if (t.empty()) bad_number(s);
  std::string buf(t);
  auto slash = buf.find('/');
  if (slash != std::string::npos) {
    double n = from_text(buf.substr(0, slash));
    double d = from_text(buf.substr(slash + 1));
    if (d == 0) bad_number(s);
    return n / d;
  }
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) bad_number(s);
  return v;
}

std::string Num<double>::to_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace orthohot
