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

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "geom.hpp"

namespace orthohot {

/// Two Fenwick trees in lockstep: one over slopes, one over intercepts, so
/// a contiguous range of per-edge linear functions sums to a LinearFn in
/// O(log n). Indices are 1-based.
template <class R>
class FenwickPair {
 public:
  explicit FenwickPair(std::size_t n)
      : n_(n), slope_(n + 1, R(0)), intercept_(n + 1, R(0)), current_(n) {}

  std::size_t size() const { return n_; }

  /// Replaces the function stored at index i.
  void set(std::size_t i, const LinearFn<R>& fn) {
    check(i);
    const LinearFn<R> delta = fn - current_[i - 1];
    current_[i - 1] = fn;
    for (std::size_t k = i; k <= n_; k += k & (~k + 1)) {
      slope_[k] += delta.slope;
      intercept_[k] += delta.intercept;
    }
  }

  const LinearFn<R>& at(std::size_t i) const {
    check(i);
    return current_[i - 1];
  }

  /// Term-by-term sum of the functions at indices i..j, inclusive.
  LinearFn<R> range_sum_fn(std::size_t i, std::size_t j) const {
    if (i < 1 || j > n_ || i > j) throw IndexOutOfRange{};
    LinearFn<R> hi = prefix(j);
    LinearFn<R> lo = prefix(i - 1);
    return hi - lo;
  }

 private:
  void check(std::size_t i) const {
    if (i < 1 || i > n_) throw IndexOutOfRange{};
  }

  LinearFn<R> prefix(std::size_t i) const {
    LinearFn<R> acc;
    for (; i > 0; i -= i & (~i + 1)) {
      acc.slope += slope_[i];
      acc.intercept += intercept_[i];
    }
    return acc;
  }

  std::size_t n_;
  std::vector<R> slope_, intercept_;
  std::vector<LinearFn<R>> current_;
};

}  // namespace orthohot
