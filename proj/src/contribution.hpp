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

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "geom.hpp"
#include "trajectory.hpp"

namespace orthohot {

/// Relative position of an x-parallel edge [x_e, x_e'] to the sweep square
/// [x, x+s]. The numeric values 1..6 order the cases as the square moves
/// left to right past the edge (6 first, 1 last); at boundary x-values where
/// two conditions hold, the lower number wins, and adjacent pieces agree
/// there for positive-length edges.
enum class ContribCase : int {
  behind = 1,    // edge entirely left of the square
  exiting = 2,   // only the edge's right part remains inside
  covering = 3,  // the square lies within the edge's x-extent
  inside = 4,    // edge entirely inside the square
  entering = 5,  // only the edge's left part is inside yet
  ahead = 6,     // edge entirely right of the square
};

/// The case of edge e for the sweep square whose left side is at x.
/// Point edges report `inside` on the closed interval [x_e - s, x_e] and
/// behind/ahead outside it. Throws VerticalEdge for y-parallel input.
template <class R>
ContribCase classify_case(const Edge2<R>& e, const R& s, const R& x) {
  if (e.orientation == Axis::y) throw VerticalEdge{};
  const R xs = R(x + s);
  if (e.orientation == Axis::point) {
    if (x <= e.a.x && e.a.x <= xs) return ContribCase::inside;
    return e.a.x <= x ? ContribCase::behind : ContribCase::ahead;
  }
  const R lo = e.xmin(), hi = e.xmax();
  if (hi <= x) return ContribCase::behind;
  if (lo <= x && x <= hi && hi <= xs) return ContribCase::exiting;
  if (lo <= x && xs <= hi) return ContribCase::covering;
  if (x <= lo && hi <= xs) return ContribCase::inside;
  if (x <= lo && lo <= xs && xs <= hi) return ContribCase::entering;
  return ContribCase::ahead;
}

/// The linear piece of e's contribution to sweep squares, valid on the case
/// interval containing x. For a positive-length edge with rate m and
/// duration w the pieces are
///   behind/ahead: 0,  exiting: -m x + (m x_e + w),  covering: m s,
///   inside: w,        entering: m x + (m s - m x_e).
/// Point edges are a step of height w supported on [x_e - s, x_e].
template <class R>
LinearFn<R> contribution_at(const Edge2<R>& e, const R& s, const R& x) {
  switch (classify_case(e, s, x)) {
    case ContribCase::behind:
    case ContribCase::ahead:
      return {};
    case ContribCase::inside:
      return {R(0), e.duration};
    case ContribCase::covering:
      return {R(0), R(e.rate() * s)};
    case ContribCase::exiting: {
      const R m = e.rate();
      return {R(-m), R(m * e.xmin() + e.duration)};
    }
    case ContribCase::entering: {
      const R m = e.rate();
      return {m, R(m * s - m * e.xmin())};
    }
  }
  return {};
}

/// Sweep positions at which e's contribution changes its linear piece:
/// the distinct values among {x_e - s, x_e' - s, x_e, x_e'}, sorted.
/// For a point edge this collapses to {x_e - s, x_e}.
template <class R>
std::vector<R> update_events(const Edge2<R>& e, const R& s) {
  if (e.orientation == Axis::y) throw VerticalEdge{};
  std::vector<R> xs;
  if (e.orientation == Axis::point) {
    xs = {R(e.a.x - s), e.a.x};
  } else {
    xs = {R(e.xmin() - s), R(e.xmax() - s), e.xmin(), e.xmax()};
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }
  return xs;
}

}  // namespace orthohot
