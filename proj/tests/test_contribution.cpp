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

#include <doctest.h>

#include <random>

#include "contribution.hpp"
#include "testutil.hpp"

using namespace orthohot;
using testutil::mk;

namespace {

Edge2<Rat> h_edge(long x0, long x1, long w, long y = 0) {
  if (x0 == x1)
    return {{mk(x0), mk(y)}, {mk(x1), mk(y)}, mk(w), Axis::point};
  return {{mk(x0), mk(y)}, {mk(x1), mk(y)}, mk(w), Axis::x};
}

}  // namespace

TEST_CASE("classify_case: table positions") {
  CHECK(classify_case(h_edge(0, 10, 10), mk(4), mk(2)) == ContribCase::covering);
  CHECK(classify_case(h_edge(1, 3, 2), mk(4), mk(0)) == ContribCase::inside);
  CHECK(classify_case(h_edge(0, 3, 3), mk(4), mk(-10)) == ContribCase::ahead);
  CHECK(classify_case(h_edge(0, 3, 3), mk(4), mk(5)) == ContribCase::behind);
  CHECK(classify_case(h_edge(0, 10, 10), mk(4), mk(8)) == ContribCase::exiting);
  CHECK(classify_case(h_edge(0, 10, 10), mk(4), mk(-2)) == ContribCase::entering);
  CHECK(static_cast<int>(ContribCase::covering) == 3);
  CHECK(static_cast<int>(ContribCase::inside) == 4);
}

TEST_CASE("classify_case: point edges use the closed support") {
  const auto p = h_edge(5, 5, 3);
  CHECK(classify_case(p, mk(4), mk(1)) == ContribCase::inside);
  CHECK(classify_case(p, mk(4), mk(5)) == ContribCase::inside);
  CHECK(classify_case(p, mk(4), mk(3)) == ContribCase::inside);
  CHECK(classify_case(p, mk(4), mk(6)) == ContribCase::behind);
  CHECK(classify_case(p, mk(4), mk(0)) == ContribCase::ahead);
}

TEST_CASE("vertical edges are rejected") {
  const Edge2<Rat> v{{mk(0), mk(0)}, {mk(0), mk(5)}, mk(5), Axis::y};
  CHECK_THROWS_AS(classify_case(v, mk(4), mk(0)), VerticalEdge);
  CHECK_THROWS_AS(contribution_at(v, mk(4), mk(0)), VerticalEdge);
  CHECK_THROWS_AS(update_events(v, mk(4)), VerticalEdge);
}

TEST_CASE("contribution_at: linear pieces") {
  const auto covering = contribution_at(h_edge(0, 10, 10), mk(4), mk(2));
  CHECK(covering.slope == 0);
  CHECK(covering.intercept == 4);  // m*s

  const auto entering = contribution_at(h_edge(3, 10, 7), mk(4), mk(0));
  CHECK(entering.slope == 1);
  CHECK(entering.intercept == 1);
  CHECK(entering(mk(0)) == 1);

  // The corrected intercept: b = m*x_e + w, so the piece matches the true
  // overlap of [2,6] with [0,3].
  const auto exiting = contribution_at(h_edge(0, 3, 3), mk(4), mk(2));
  CHECK(exiting.slope == -1);
  CHECK(exiting.intercept == 3);
  CHECK(exiting(mk(2)) == 1);

  const auto point = contribution_at(h_edge(5, 5, 3), mk(4), mk(2));
  CHECK(point.slope == 0);
  CHECK(point.intercept == 3);
  CHECK(contribution_at(h_edge(5, 5, 3), mk(4), mk(7)).is_zero());
}

TEST_CASE("update_events: sorted distinct boundaries") {
  CHECK(update_events(h_edge(0, 3, 3), mk(4)) ==
        std::vector<Rat>{mk(-4), mk(-1), mk(0), mk(3)});
  CHECK(update_events(h_edge(0, 10, 10), mk(4)) ==
        std::vector<Rat>{mk(-4), mk(0), mk(6), mk(10)});
  CHECK(update_events(h_edge(5, 5, 3), mk(4)) == std::vector<Rat>{mk(1), mk(5)});
  // s equal to the length collapses duplicates
  CHECK(update_events(h_edge(0, 4, 2), mk(4)) == std::vector<Rat>{mk(-4), mk(0), mk(4)});
}

TEST_CASE("contribution agrees with the direct square weight") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const Edge2<Rat> e = testutil::random_h_edge(rng);
    const Rat s = testutil::random_side(rng);
    EdgeSet2<Rat> single;
    single.edges.push_back(e);
    const Rat ylow = Rat(e.y() - s / 2);
    for (int q = 0; q < 200; ++q) {
      const Rat x = testutil::quarters(rng, -60, 60);
      CHECK(contribution_at(e, s, x)(x) == square_weight(single, x, ylow, s));
    }
  }
}

TEST_CASE("adjacent pieces agree at case boundaries") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 80; ++it) {
    Edge2<Rat> e = testutil::random_h_edge(rng);
    if (e.orientation == Axis::point) continue;  // point steps are intentional
    const Rat s = testutil::random_side(rng);
    const auto xs = update_events(e, s);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Rat before = i == 0 ? Rat(xs[0] - 1) : Rat((xs[i - 1] + xs[i]) / 2);
      const Rat after = i + 1 == xs.size() ? Rat(xs[i] + 1) : Rat((xs[i] + xs[i + 1]) / 2);
      CHECK(contribution_at(e, s, before)(xs[i]) == contribution_at(e, s, after)(xs[i]));
    }
  }
}

TEST_CASE("the uncorrected exiting intercept breaks continuity") {
  // Negative control: with b = m*x_e - m*w the piece disagrees with the
  // adjacent case at x = x_e' for every positive-duration edge.
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    Edge2<Rat> e = testutil::random_h_edge(rng);
    const Rat s = testutil::random_side(rng);
    if (e.orientation == Axis::point || e.duration == 0) continue;
    ++checked;
    const Rat m = e.rate();
    const LinearFn<Rat> bad{Rat(-m), Rat(m * e.xmin() - m * e.duration)};
    CHECK(bad(e.xmax()) != contribution_at(e, s, Rat(e.xmax() + 1))(e.xmax()));
  }
  CHECK(checked > 20);
}

TEST_CASE("piecewise structure and bounds") {
  std::mt19937_64 rng(10);
  for (int it = 0; it < 60; ++it) {
    const Edge2<Rat> e = testutil::random_h_edge(rng);
    const Rat s = testutil::random_side(rng);
    const auto xs = update_events(e, s);
    // Constant piece between consecutive events.
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const Rat a = Rat((3 * xs[i] + xs[i + 1]) / 4);
      const Rat b = Rat((xs[i] + 3 * xs[i + 1]) / 4);
      CHECK(contribution_at(e, s, a) == contribution_at(e, s, b));
    }
    if (e.orientation == Axis::point) continue;
    const Rat cap = Rat(e.rate() * s) < e.duration ? Rat(e.rate() * s) : e.duration;
    for (int q = 0; q < 50; ++q) {
      const Rat x = testutil::quarters(rng, -60, 60);
      const Rat val = contribution_at(e, s, x)(x);
      CHECK(val >= 0);
      CHECK(val <= cap);
    }
  }
}
