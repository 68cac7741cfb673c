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

#include "generate.hpp"

#include <random>
#include <stdexcept>

#include "errors.hpp"

namespace orthohot {

namespace {

constexpr int kClusterBox = 12;

// Modulo on raw mt19937_64 output instead of std::uniform_int_distribution:
// the distribution's algorithm is implementation-defined, and generated
// files must be identical everywhere.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

struct Builder {
  // Coordinates are kept in hundredths so walk endpoints rarely coincide;
  // timestamps are plain integers.
  int dim;
  long pos[3] = {0, 0, 0};
  long t = 0;
  ParsedTrajectory out;

  explicit Builder(int dim, long x = 0, long y = 0, long z = 0) : dim(dim) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("dim must be 2 or 3");
    pos[0] = 100 * x;
    pos[1] = 100 * y;
    pos[2] = 100 * z;
    out.dim = dim;
    push();
  }

  Rat coord(int axis) const {
    Rat r(pos[axis], 100);
    r.canonicalize();
    return r;
  }

  void push() {
    if (dim == 2)
      out.v2.push_back({Rat(t), {coord(0), coord(1)}});
    else
      out.v3.push_back({Rat(t), {coord(0), coord(1), coord(2)}});
    out.source_lines.push_back(out.source_lines.size() + 2);  // row after the header
  }

  void step_centi(int axis, long delta_centi, long duration) {
    pos[axis] += delta_centi;
    t += duration;
    push();
  }

  void step(int axis, long delta, long duration) { step_centi(axis, 100 * delta, duration); }
};

}  // namespace

ParsedTrajectory gen_walk(std::uint64_t n, std::uint64_t seed, int dim) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::mt19937_64 rng(seed);
  Builder b(dim);
  for (std::uint64_t i = 0; i < n; ++i) {
    const long duration = 1 + static_cast<long>(pick(rng, 9));
    if (pick(rng, 12) == 0) {
      b.step(0, 0, duration);  // pause: a point edge
      continue;
    }
    const int axis = static_cast<int>(pick(rng, static_cast<std::uint64_t>(dim)));
    const long dir = pick(rng, 2) == 0 ? 1 : -1;
    const long len = 100 + static_cast<long>(pick(rng, 801));  // 1.00 .. 9.00
    b.step_centi(axis, dir * len, duration);
  }
  return b.out;
}

int cluster_box_side() { return kClusterBox; }

ParsedTrajectory gen_cluster(std::uint64_t n, std::uint64_t seed, double revisit_rate, int dim) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (revisit_rate < 0 || revisit_rate > 1)
    throw std::invalid_argument("revisit_rate must be in [0, 1]");
  std::mt19937_64 rng(seed);
  Builder b(dim, kClusterBox / 2, kClusterBox / 2, kClusterBox / 2);
  for (std::uint64_t i = 0; i < n; ++i) {
    const long duration = 1 + static_cast<long>(pick(rng, 9));
    if (pick(rng, 16) == 0) {
      b.step(0, 0, duration);
      continue;
    }
    const int axis = static_cast<int>(pick(rng, static_cast<std::uint64_t>(dim)));
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    if (u < revisit_rate) {
      // Move to a different cell of the box along the chosen axis.
      long target = 100 * static_cast<long>(pick(rng, kClusterBox + 1));
      if (target == b.pos[axis]) target = (target + 100) % (100 * (kClusterBox + 1));
      b.step_centi(axis, target - b.pos[axis], duration);
    } else {
      const long dir = pick(rng, 2) == 0 ? 1 : -1;
      const long len = 1 + static_cast<long>(pick(rng, 9));
      b.step(axis, dir * len, duration);
    }
  }
  return b.out;
}

ParsedTrajectory gen_comb(std::uint64_t n, int dim) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  static const long kWidths[4] = {21, 13, 29, 17};
  Builder b(dim);
  long dir = 1;
  int climb = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i % 2 == 0) {
      const long w = kWidths[(i / 2) % 4];
      b.step(0, dir * w, w);  // tooth at unit rate
      dir = -dir;
    } else {
      const int axis = (dim == 3 && climb++ % 2 == 1) ? 2 : 1;
      b.step(axis, 1, 1);
    }
  }
  return b.out;
}

}  // namespace orthohot
