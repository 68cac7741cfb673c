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

#include "cube.hpp"
#include "kinetic.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace orthohot;
using testutil::mk;

TEST_CASE("project_slab: per-orientation behaviour") {
  EdgeSet3<Rat> t;
  t.edges.push_back({{mk(3), mk(3), mk(0)}, {mk(3), mk(3), mk(10)}, mk(10), Axis::z});
  t.edges.push_back({{mk(0), mk(1), mk(4)}, {mk(6), mk(1), mk(4)}, mk(2), Axis::x});
  t.edges.push_back({{mk(0), mk(1), mk(9)}, {mk(6), mk(1), mk(9)}, mk(2), Axis::x});
  t.edges.push_back({{mk(7), mk(7), mk(20)}, {mk(7), mk(7), mk(20)}, mk(5), Axis::point});

  const auto flat = project_slab(t, Slab<Rat>{mk(0), mk(4)});
  REQUIRE(flat.size() == 2);
  // The z-edge collapses to a point carrying the slab overlap time.
  CHECK(flat.edges[0].orientation == Axis::point);
  CHECK(flat.edges[0].a == Pt2<Rat>{mk(3), mk(3)});
  CHECK(flat.edges[0].duration == 4);
  // The x-edge sits exactly on the top face: closed slab keeps it whole.
  CHECK(flat.edges[1].orientation == Axis::x);
  CHECK(flat.edges[1].duration == 2);

  // Everything above the slab is dropped.
  CHECK(project_slab(t, Slab<Rat>{mk(30), mk(34)}).empty());

  // Touching overlap yields a zero-duration point edge.
  const auto touch = project_slab(t, Slab<Rat>{mk(-4), mk(0)});
  REQUIRE(touch.size() == 1);
  CHECK(touch.edges[0].duration == 0);
}

TEST_CASE("reflect_z is an involution") {
  const auto t = testutil::random_orthogonal_3d(16, 777);
  CHECK(reflect_z(reflect_z(t)).edges == t.edges);
}

TEST_CASE("projection weight identity") {
  std::mt19937_64 rng(71);
  for (int it = 0; it < 30; ++it) {
    const auto t = testutil::random_orthogonal_3d(14, 7100 + it);
    const Rat s = testutil::random_side(rng);
    for (int q = 0; q < 15; ++q) {
      const Rat x = testutil::quarters(rng, -30, 30);
      const Rat y = testutil::quarters(rng, -30, 30);
      const Rat z = testutil::quarters(rng, -30, 30);
      const auto flat = project_slab(t, Slab<Rat>{z, Rat(z + s)});
      CHECK(cube_weight(t, x, y, z, s) == square_weight(flat, x, y, s));
    }
  }
}

TEST_CASE("cube_hotspot with the exact 2D solver equals the 3D oracle") {
  std::mt19937_64 rng(72);
  const auto exact2d = [](const EdgeSet2<Rat>& f, const Rat& side) {
    return exact_hotspot_2d(f, side);
  };
  for (int it = 0; it < 25; ++it) {
    const auto t = testutil::random_orthogonal_3d(1 + rng() % 16, 7200 + it);
    const Rat s = testutil::random_side(rng);
    const auto lifted = cube_hotspot<Rat>(t, s, exact2d);
    const auto oracle = exact_hotspot_3d(t, s);
    CHECK(lifted.weight == oracle.weight);
    CHECK(cube_weight(t, lifted) == lifted.weight);
  }
}

TEST_CASE("planar input reduces to a single effective slab") {
  std::mt19937_64 rng(73);
  const auto flat2 = testutil::random_orthogonal(12, 321);
  EdgeSet3<Rat> flat3;
  for (const auto& e : flat2.edges)
    flat3.edges.push_back(
        {{e.a.x, e.a.y, mk(2)}, {e.b.x, e.b.y, mk(2)}, e.duration, e.orientation});
  const auto lifted = cube_hotspot<Rat>(
      flat3, mk(3), [](const EdgeSet2<Rat>& f, const Rat& s) { return exact_hotspot_2d(f, s); });
  CHECK(lifted.weight == exact_hotspot_3d(flat3, mk(3)).weight);
  CHECK(lifted.weight == exact_hotspot_2d(flat2, mk(3)).weight);
}

TEST_CASE("cube_hotspot with the half solver keeps the half bound") {
  std::mt19937_64 rng(74);
  for (int it = 0; it < 20; ++it) {
    const auto t = testutil::random_orthogonal_3d(1 + rng() % 16, 7400 + it);
    const Rat s = testutil::random_side(rng);
    const auto lifted =
        cube_hotspot<Rat>(t, s, [](const EdgeSet2<Rat>& f, const Rat& side) {
          return half_hotspot(f, side);
        });
    CHECK(2 * lifted.weight >= exact_hotspot_3d(t, s).weight);
    CHECK(cube_weight(t, lifted) == lifted.weight);
  }
  CHECK_THROWS_AS(cube_hotspot<Rat>(EdgeSet3<Rat>{}, mk(1),
                                    [](const EdgeSet2<Rat>& f, const Rat& side) {
                                      return exact_hotspot_2d(f, side);
                                    }),
                  EmptyTrajectory);
}
