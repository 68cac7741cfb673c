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

#include <random>

#include "rational.hpp"
#include "trajectory.hpp"

namespace testutil {

using orthohot::Axis;
using orthohot::Edge2;
using orthohot::Edge3;
using orthohot::EdgeSet2;
using orthohot::EdgeSet3;
using orthohot::Pt2;
using orthohot::Pt3;
using orthohot::Rat;

inline Rat mk(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Uniform k/4 with k in [4*lo, 4*hi].
inline Rat quarters(std::mt19937_64& rng, long lo, long hi) {
  const long span = 4 * (hi - lo) + 1;
  return mk(4 * lo + static_cast<long>(rng() % span), 4);
}

inline Rat duration(std::mt19937_64& rng) {
  // Mostly positive integers; the occasional zero-duration edge is legal.
  const long d = static_cast<long>(rng() % 12);
  return mk(d == 11 ? 0 : d + 1);
}

struct InstanceOpts {
  long coord_lo = -24;
  long coord_hi = 24;
  long max_len4 = 40;  // edge length in quarters
  int point_percent = 15;
};

inline Edge2<Rat> random_h_edge(std::mt19937_64& rng, const InstanceOpts& o = {}) {
  Edge2<Rat> e;
  const Rat y = quarters(rng, o.coord_lo, o.coord_hi);
  const Rat x0 = quarters(rng, o.coord_lo, o.coord_hi);
  e.duration = duration(rng);
  if (static_cast<int>(rng() % 100) < o.point_percent) {
    e.a = e.b = {x0, y};
    e.orientation = Axis::point;
  } else {
    const Rat len = mk(1 + static_cast<long>(rng() % o.max_len4), 4);
    e.a = {x0, y};
    e.b = {Rat(x0 + len), y};
    e.orientation = Axis::x;
  }
  return e;
}

inline EdgeSet2<Rat> random_horizontal(std::size_t n, std::uint64_t seed,
                                       const InstanceOpts& o = {}) {
  std::mt19937_64 rng(seed);
  EdgeSet2<Rat> out;
  for (std::size_t i = 0; i < n; ++i) out.edges.push_back(random_h_edge(rng, o));
  return out;
}

inline EdgeSet2<Rat> random_orthogonal(std::size_t n, std::uint64_t seed,
                                       const InstanceOpts& o = {}) {
  std::mt19937_64 rng(seed);
  EdgeSet2<Rat> out;
  for (std::size_t i = 0; i < n; ++i) {
    Edge2<Rat> e = random_h_edge(rng, o);
    if (e.orientation == Axis::x && rng() % 2 == 0) {
      // Swing it vertical.
      e.b = {e.a.x, Rat(e.a.y + (e.b.x - e.a.x))};
      e.orientation = Axis::y;
    }
    out.edges.push_back(e);
  }
  return out;
}

inline EdgeSet3<Rat> random_orthogonal_3d(std::size_t n, std::uint64_t seed,
                                          const InstanceOpts& o = {}) {
  std::mt19937_64 rng(seed);
  EdgeSet3<Rat> out;
  for (std::size_t i = 0; i < n; ++i) {
    Edge3<Rat> e;
    const Pt3<Rat> p{quarters(rng, o.coord_lo, o.coord_hi), quarters(rng, o.coord_lo, o.coord_hi),
                     quarters(rng, o.coord_lo, o.coord_hi)};
    e.a = e.b = p;
    e.duration = duration(rng);
    if (static_cast<int>(rng() % 100) < o.point_percent) {
      e.orientation = Axis::point;
    } else {
      const Rat len = mk(1 + static_cast<long>(rng() % o.max_len4), 4);
      switch (rng() % 3) {
        case 0:
          e.b.x += len;
          e.orientation = Axis::x;
          break;
        case 1:
          e.b.y += len;
          e.orientation = Axis::y;
          break;
        default:
          e.b.z += len;
          e.orientation = Axis::z;
          break;
      }
    }
    out.edges.push_back(e);
  }
  return out;
}

inline Rat random_side(std::mt19937_64& rng) {
  return mk(1 + static_cast<long>(rng() % 20), 2);  // 1/2 .. 10
}

}  // namespace testutil
