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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthohot {

/// Vertex timestamps must be strictly increasing; `index` is the offending
/// vertex (0-based, the later vertex of the violating pair).
struct NonMonotoneTime : std::invalid_argument {
  explicit NonMonotoneTime(std::size_t index)
      : std::invalid_argument("timestamp not strictly increasing at vertex " +
                              std::to_string(index)),
        index(index) {}
  std::size_t index;
};

/// Two consecutive vertices changed more than one coordinate.
struct NonOrthogonalStep : std::invalid_argument {
  explicit NonOrthogonalStep(std::size_t index)
      : std::invalid_argument("step to vertex " + std::to_string(index) +
                              " changes more than one coordinate"),
        index(index) {}
  std::size_t index;
};

struct EmptyTrajectory : std::invalid_argument {
  EmptyTrajectory() : std::invalid_argument("trajectory has no edges") {}
};

/// A y-parallel edge was handed to code that sweeps horizontal trajectories.
struct VerticalEdge : std::invalid_argument {
  VerticalEdge() : std::invalid_argument("edge is y-parallel; expected x-parallel or point") {}
};

struct IndexOutOfRange : std::out_of_range {
  IndexOutOfRange() : std::out_of_range("index out of range") {}
};

struct UnknownEdge : std::out_of_range {
  explicit UnknownEdge(std::size_t id)
      : std::out_of_range("unknown edge id " + std::to_string(id)) {}
};

/// Malformed input text; `line` is 1-based.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  std::size_t line;
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace orthohot
