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

#include <cstdint>

namespace orthohot {

template <class R>
struct Pt2 {
  R x{}, y{};
  friend bool operator==(const Pt2&, const Pt2&) = default;
};

template <class R>
struct Pt3 {
  R x{}, y{}, z{};
  friend bool operator==(const Pt3&, const Pt3&) = default;
};

/// slope * x + intercept. Closed under addition and negation, which is all
/// the sweeps ever need.
template <class R>
struct LinearFn {
  R slope{}, intercept{};

  R operator()(const R& x) const { return R(slope * x + intercept); }

  LinearFn& operator+=(const LinearFn& o) {
    slope += o.slope;
    intercept += o.intercept;
    return *this;
  }
  LinearFn& operator-=(const LinearFn& o) {
    slope -= o.slope;
    intercept -= o.intercept;
    return *this;
  }
  friend LinearFn operator+(LinearFn a, const LinearFn& b) { return a += b; }
  friend LinearFn operator-(LinearFn a, const LinearFn& b) { return a -= b; }
  LinearFn operator-() const { return {R(-slope), R(-intercept)}; }
  friend bool operator==(const LinearFn&, const LinearFn&) = default;
  bool is_zero() const { return slope == R(0) && intercept == R(0); }
};

/// Edge orientation; `point` marks a degenerate edge (stationary interval).
enum class Axis { point, x, y, z };

/// A square (dim 2) or cube (dim 3) of side `side` with lower-left(-bottom)
/// corner (x, y[, z]) and its weight with respect to some edge set.
template <class R>
struct Placement {
  int dim = 2;
  R x{}, y{}, z{};
  R side{};
  R weight{};
};

/// Instrumentation shared by the sweep algorithms. `events` counts processed
/// sweep events (structure updates for the corner sweep; queue pops for the
/// kinetic sweep); the other two are kinetic-only.
struct RunCounters {
  std::uint64_t events = 0;
  std::uint64_t winner_changes = 0;
  std::uint64_t stale_events = 0;
};

}  // namespace orthohot
