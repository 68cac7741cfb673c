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

#include <optional>
#include <string>

#include "io.hpp"

namespace orthohot {

struct SvgBox {
  double x, y, side;
};

/// Static SVG figure of a trajectory (3D input is drawn in top view) with an
/// optional hotspot square overlaid. Pauses are marked as dots.
std::string render_svg(const ParsedTrajectory& t, const std::optional<SvgBox>& box);

}  // namespace orthohot
