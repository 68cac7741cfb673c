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
#include <cstddef>
#include <optional>
#include <vector>

#include "contribution.hpp"
#include "fenwick.hpp"
#include "trajectory.hpp"

namespace orthohot {

/// Maximum-weight square whose lower-left or upper-left corner coincides
/// with an edge endpoint of a horizontal trajectory H (x-parallel and point
/// edges only). Plane sweep over the contribution-change events; at each
/// event x that is an endpoint x-coordinate, the two candidate squares per
/// endpoint are scored with O(log n) Fenwick range sums over the edges
/// sorted by height.
///
/// A point edge's contribution is a step supported on the closed interval
/// [x_e - s, x_e], so its drop back to zero is applied only after the
/// evaluations at x_e; every other case change is continuous and is applied
/// before evaluating. This makes each evaluation equal the closed-square
/// weight exactly.
template <class R>
Placement<R> corner_anchored_max(const EdgeSet2<R>& h, const R& s, RunCounters* counters = nullptr) {
  if (h.empty()) throw EmptyTrajectory{};
  const std::size_t n = h.size();

  // Edge ranks sorted by height (stable on input order).
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h.edges[a].y() < h.edges[b].y();
  });
  std::vector<R> ys;  // heights in rank order
  ys.reserve(n);
  std::vector<std::size_t> rank_of(n);
  for (std::size_t r = 0; r < n; ++r) {
    ys.push_back(h.edges[order[r]].y());
    rank_of[order[r]] = r;
  }

  struct Ev {
    R x;
    int phase;  // 0: apply before evaluating; 2: point edge leaves, after
    std::size_t edge;
    LinearFn<R> fn;  // piece valid on the interval this event opens
  };
  // The piece for each interval is classified at the interval's midpoint:
  // exact-mode equivalent to classifying at the event itself, and immune to
  // the one-ulp slips of recomputing x + s at a boundary in float mode.
  std::vector<Ev> events;
  events.reserve(4 * n);
  std::vector<Pt2<R>> endpoints;
  endpoints.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = h.edges[i];
    if (e.orientation == Axis::point) {
      events.push_back({R(e.a.x - s), 0, i, {R(0), e.duration}});
      events.push_back({e.a.x, 2, i, {}});
    } else {
      const auto xs = update_events(e, s);
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const R mid = k + 1 < xs.size() ? R(xs[k] + (xs[k + 1] - xs[k]) / 2) : R(xs[k] + 1);
        events.push_back({xs[k], 0, i, contribution_at(e, s, mid)});
      }
    }
    endpoints.push_back(e.a);
    if (!(e.b == e.a)) endpoints.push_back(e.b);
  }
  std::sort(events.begin(), events.end(), [](const Ev& a, const Ev& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.phase != b.phase) return a.phase < b.phase;
    return a.edge < b.edge;
  });
  std::sort(endpoints.begin(), endpoints.end(), [](const Pt2<R>& a, const Pt2<R>& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

  FenwickPair<R> fen(n);
  RunCounters local;
  RunCounters& c = counters ? *counters : local;

  std::optional<Placement<R>> best;
  const auto offer = [&](const R& x, const R& y, const R& w) {
    if (!best || w > best->weight) best = Placement<R>{2, x, y, R(0), s, w};
  };
  // Scores the two squares anchored at endpoint (x, y): one with its lower
  // side and one with its upper side at y.
  const auto evaluate = [&](const R& x, const R& y) {
    const auto lo_rank = [&](const R& v) {
      return std::lower_bound(ys.begin(), ys.end(), v) - ys.begin();
    };
    const auto hi_rank = [&](const R& v) {
      return std::upper_bound(ys.begin(), ys.end(), v) - ys.begin();
    };
    const auto score = [&](const R& ylo, const R& yhi, const R& anchor_y) {
      const auto lo = lo_rank(ylo);
      const auto hi = hi_rank(yhi);
      if (lo < hi) offer(x, anchor_y, fen.range_sum_fn(lo + 1, hi)(x));
    };
    score(y, R(y + s), y);
    score(R(y - s), y, R(y - s));
  };

  std::size_t ei = 0, pi = 0;
  while (ei < events.size()) {
    const R x = events[ei].x;
    while (ei < events.size() && events[ei].x == x && events[ei].phase == 0) {
      fen.set(rank_of[events[ei].edge] + 1, events[ei].fn);
      ++c.events;
      ++ei;
    }
    while (pi < endpoints.size() && endpoints[pi].x == x) {
      evaluate(x, endpoints[pi].y);
      ++pi;
    }
    while (ei < events.size() && events[ei].x == x) {  // phase 2
      fen.set(rank_of[events[ei].edge] + 1, events[ei].fn);
      ++c.events;
      ++ei;
    }
  }
  return *best;
}

/// 1/4-approximate square hotspot of an orthogonal trajectory: the corner
/// sweep runs on four configurations (H, H turned 180 degrees, V turned 90
/// and 270 degrees), each winner is mapped back and re-scored against the
/// full trajectory, and the best candidate wins.
template <class R>
Placement<R> quarter_hotspot(const EdgeSet2<R>& t, const R& s, RunCounters* counters = nullptr) {
  if (t.empty()) throw EmptyTrajectory{};
  auto [hset, vset] = partition(t);

  std::optional<Placement<R>> best;
  const auto offer = [&](Placement<R> p) {
    p.weight = square_weight(t, p);
    if (!best || p.weight > best->weight) best = p;
  };
  const auto run = [&](const EdgeSet2<R>& part, int quarter_turns) {
    if (part.empty()) return;
    Placement<R> p = corner_anchored_max(rotate(part, quarter_turns), s, counters);
    offer(rotate_square(p, (4 - quarter_turns) % 4));
  };
  run(hset, 0);
  run(hset, 2);
  run(vset, 1);
  run(vset, 3);
  return *best;
}

}  // namespace orthohot
