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

#include "oracle.hpp"
#include "quarter.hpp"
#include "testutil.hpp"

using namespace orthohot;
using testutil::mk;

namespace {

EdgeSet2<Rat> l_shape() {
  return build_edge_set(std::vector<TimedVertex2<Rat>>{
      {mk(0), {mk(0), mk(0)}}, {mk(4), {mk(4), mk(0)}}, {mk(8), {mk(4), mk(4)}}});
}

}  // namespace

TEST_CASE("corner_anchored_max: hand-checked instances") {
  EdgeSet2<Rat> one;
  one.edges.push_back({{mk(0), mk(0)}, {mk(10), mk(0)}, mk(10), Axis::x});
  CHECK(corner_anchored_max(one, mk(4)).weight == 4);

  EdgeSet2<Rat> stacked;
  stacked.edges.push_back({{mk(0), mk(0)}, {mk(10), mk(0)}, mk(10), Axis::x});
  stacked.edges.push_back({{mk(5), mk(1)}, {mk(9), mk(1)}, mk(8), Axis::x});
  const auto r = corner_anchored_max(stacked, mk(4));
  CHECK(r.weight == 12);
  CHECK(square_weight(stacked, r) == 12);

  EdgeSet2<Rat> pt;
  pt.edges.push_back({{mk(3), mk(7)}, {mk(3), mk(7)}, mk(5), Axis::point});
  CHECK(corner_anchored_max(pt, mk(2)).weight == 5);

  CHECK_THROWS_AS(corner_anchored_max(EdgeSet2<Rat>{}, mk(1)), EmptyTrajectory);
  EdgeSet2<Rat> vert;
  vert.edges.push_back({{mk(0), mk(0)}, {mk(0), mk(4)}, mk(4), Axis::y});
  CHECK_THROWS_AS(corner_anchored_max(vert, mk(1)), VerticalEdge);
}

TEST_CASE("returned placement weight is genuine") {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 40; ++it) {
    const auto h = testutil::random_horizontal(1 + rng() % 24, 5100 + it);
    const Rat s = testutil::random_side(rng);
    const auto r = corner_anchored_max(h, s);
    CHECK(square_weight(h, r) == r.weight);
  }
}

TEST_CASE("corner sweep equals the anchored brute force") {
  std::mt19937_64 rng(52);
  for (int it = 0; it < 120; ++it) {
    const auto h = testutil::random_horizontal(1 + rng() % 32, 5200 + it);
    const Rat s = testutil::random_side(rng);
    CHECK(corner_anchored_max(h, s).weight == corner_anchored_oracle(h, s).weight);
  }
}

TEST_CASE("simultaneous point enter and leave at one sweep position") {
  // One point leaves the sweep square exactly where another enters it; the
  // closed square at that x contains both.
  EdgeSet2<Rat> h;
  h.edges.push_back({{mk(9), mk(0)}, {mk(9), mk(0)}, mk(1), Axis::point});
  h.edges.push_back({{mk(5), mk(0)}, {mk(5), mk(0)}, mk(1), Axis::point});
  CHECK(corner_anchored_oracle(h, mk(4)).weight == 2);
  CHECK(corner_anchored_max(h, mk(4)).weight == 2);
}

TEST_CASE("event budget stays within four per edge") {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 10; ++it) {
    const std::size_t n = 1 + rng() % 40;
    const auto h = testutil::random_horizontal(n, 5300 + it);
    RunCounters c;
    corner_anchored_max(h, testutil::random_side(rng), &c);
    CHECK(c.events <= 4 * n);
  }
}

TEST_CASE("quarter_hotspot: L-shape and degenerate inputs") {
  const auto l = l_shape();
  const auto r = quarter_hotspot(l, mk(2));
  CHECK(r.weight >= 1);  // h(T)/4 with h(T) = 4
  CHECK(r.weight >= 2);  // observed: each arm alone reaches 2
  CHECK(square_weight(l, r) == r.weight);

  EdgeSet2<Rat> pt;
  pt.edges.push_back({{mk(3), mk(7)}, {mk(3), mk(7)}, mk(5), Axis::point});
  CHECK(quarter_hotspot(pt, mk(2)).weight == 5);

  CHECK_THROWS_AS(quarter_hotspot(EdgeSet2<Rat>{}, mk(1)), EmptyTrajectory);
}

TEST_CASE("quarter bound against the exact oracle") {
  std::mt19937_64 rng(54);
  for (int it = 0; it < 60; ++it) {
    const auto t = testutil::random_orthogonal(1 + rng() % 28, 5400 + it);
    const Rat s = testutil::random_side(rng);
    const Rat approx = quarter_hotspot(t, s).weight;
    const Rat exact = exact_hotspot_2d(t, s).weight;
    CHECK(4 * approx >= exact);
  }
}

TEST_CASE("one-orientation input tightens the bound to a half") {
  std::mt19937_64 rng(55);
  for (int it = 0; it < 30; ++it) {
    const auto h = testutil::random_horizontal(1 + rng() % 24, 5500 + it);
    const Rat s = testutil::random_side(rng);
    CHECK(2 * quarter_hotspot(h, s).weight >= exact_hotspot_2d(h, s).weight);
  }
}
