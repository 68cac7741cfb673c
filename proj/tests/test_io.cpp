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

#include "generate.hpp"
#include "io.hpp"
#include "kinetic.hpp"
#include "oracle.hpp"
#include "quarter.hpp"
#include "testutil.hpp"

using namespace orthohot;
using testutil::mk;

TEST_CASE("parse: header, comments, blanks, both dims") {
  const auto t = parse_trajectory_text(
      "# a comment\n"
      "t,x,y\n"
      "\n"
      "0, 0, 0\n"
      "4,4,0\n"
      "# trailing comment\n"
      "8,4,4\n");
  CHECK(t.dim == 2);
  REQUIRE(t.v2.size() == 3);
  CHECK(t.v2[1].p.x == 4);
  CHECK(t.source_lines == std::vector<std::size_t>{4, 5, 7});

  const auto t3 = parse_trajectory_text("0,0,0,0\n1,0,0,2.5\n");
  CHECK(t3.dim == 3);
  CHECK(t3.v3[1].p.z == mk(5, 2));
}

TEST_CASE("parse: line-numbered failures") {
  const auto expect_line = [](const char* text, std::size_t line) {
    try {
      parse_trajectory_text(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("t,x,y\n1,2\n", 2);              // too few columns
  expect_line("0,0,0\n# ok\n1,2,bogus\n", 3);  // bad number
  expect_line("0,0,0\n1,2,3,4\n", 2);          // column count changed
  expect_line("# only comments\n", 1);         // no data
}

TEST_CASE("render/parse round trip preserves rationals exactly") {
  ParsedTrajectory t;
  t.dim = 2;
  t.v2 = {{mk(0), {mk(-13, 4), mk(1, 8)}}, {mk(7, 2), {mk(-13, 4), mk(5)}}};
  t.source_lines = {2, 3};
  const auto back = parse_trajectory_text(render_trajectory(t));
  REQUIRE(back.v2.size() == t.v2.size());
  for (std::size_t i = 0; i < t.v2.size(); ++i) {
    CHECK(back.v2[i].t == t.v2[i].t);
    CHECK(back.v2[i].p == t.v2[i].p);
  }
  // Non-terminating values fall back to fractions and still round trip.
  ParsedTrajectory odd;
  odd.dim = 2;
  odd.v2 = {{mk(0), {mk(1, 3), mk(0)}}, {mk(1), {mk(1, 3), mk(2, 7)}}};
  const auto back2 = parse_trajectory_text(render_trajectory(odd));
  CHECK(back2.v2[0].p.x == mk(1, 3));
  CHECK(back2.v2[1].p.y == mk(2, 7));
}

TEST_CASE("result record renders and parses losslessly") {
  Placement<Rat> p{2, mk(5, 2), mk(0), mk(0), mk(2), mk(4)};
  RunCounters c{123, 45, 6};
  ResultRecord r = make_record("half", "exact", p, c, 98765);
  const auto back = parse_result_text(render_result(r));
  CHECK(back.algorithm == "half");
  CHECK(back.dim == 2);
  CHECK(back.mode == "exact");
  CHECK(rat_from_text(back.weight) == p.weight);
  CHECK(rat_from_text(back.corner[0]) == p.x);
  CHECK(back.corner_decimal[0] == "2.5");
  CHECK(back.events == 123);
  CHECK(back.winner_changes == 45);
  CHECK(back.stale_events == 6);
  CHECK(back.runtime_ns == 98765);

  Placement<double> pf{3, 1.25, -2.0, 0.5, 2.0, 4.125};
  const auto rf = make_record("half", "float", pf, c, 1);
  const auto backf = parse_result_text(render_result(rf));
  CHECK(Num<double>::from_text(backf.weight) == pf.weight);
  CHECK(Num<double>::from_text(backf.corner[2]) == pf.z);

  CHECK_THROWS_AS(parse_result_text("algorithm: half\n"), ParseError);
  CHECK_THROWS_AS(parse_result_text("not a record"), ParseError);
}

TEST_CASE("float and exact mode agree closely on random instances") {
  // Compared on the sweep maxima, which are well-defined functionals of the
  // input. The re-scored wrapper result is an argmax pick: when the sweep
  // maximum is attained on a plateau, the two modes may legitimately return
  // different corners whose full-trajectory weights differ.
  for (const auto& [n, seed] : {std::pair<std::uint64_t, std::uint64_t>{100, 1},
                                {1000, 2},
                                {2500, 3}}) {
    const auto parsed = gen_walk(n, seed, 2);
    const auto exact_set = build_edge_set(parsed.v2);
    const auto float_set = to_double(exact_set);
    const auto [he, ve] = partition(exact_set);
    const auto [hf, vf] = partition(float_set);
    const double we = rat_to_double(half_hotspot_horizontal(he, mk(16)).weight);
    const double wf = half_hotspot_horizontal(hf, 16.0).weight;
    CHECK(std::abs(we - wf) <= 1e-9 * std::max(1.0, std::abs(we)));
    const double ue = rat_to_double(half_hotspot_horizontal(rotate(ve, 1), mk(16)).weight);
    const double uf = half_hotspot_horizontal(rotate(vf, 1), 16.0).weight;
    CHECK(std::abs(ue - uf) <= 1e-9 * std::max(1.0, std::abs(ue)));
    const double qe = rat_to_double(quarter_hotspot(exact_set, mk(16)).weight);
    const double qf = quarter_hotspot(float_set, 16.0).weight;
    CHECK(std::abs(qe - qf) <= 1e-9 * std::max(1.0, std::abs(qe)));
  }
}
