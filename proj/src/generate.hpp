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

#include "io.hpp"

namespace orthohot {

/// Instance families for tests and benchmarks. All generators emit valid
/// orthogonal polylines with strictly increasing integer timestamps and are
/// deterministic: the same arguments produce byte-identical files.

/// Random axis-parallel walk with occasional pauses; n edges.
ParsedTrajectory gen_walk(std::uint64_t n, std::uint64_t seed, int dim);

/// Walk that stays inside the box [0, cluster_box_side()]^dim with
/// probability revisit_rate per step and wanders freely otherwise. With
/// revisit_rate = 1 every edge lies in the box, so a square/cube of that
/// side captures the whole duration.
ParsedTrajectory gen_cluster(std::uint64_t n, std::uint64_t seed, double revisit_rate, int dim);
int cluster_box_side();

/// Deterministic serpentine comb: long horizontal teeth on consecutive
/// levels with staggered spans, the stress family for kinetic winner
/// changes.
ParsedTrajectory gen_comb(std::uint64_t n, int dim);

}  // namespace orthohot
