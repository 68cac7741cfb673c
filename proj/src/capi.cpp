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

#include "orthohot/orthohot.h"

#include <chrono>
#include <fstream>
#include <map>
#include <string>

#include "cube.hpp"
#include "generate.hpp"
#include "io.hpp"
#include "kinetic.hpp"
#include "oracle.hpp"
#include "quarter.hpp"
#include "svg.hpp"

using namespace orthohot;

struct oht_trajectory {
  ParsedTrajectory parsed;
  EdgeSet2<Rat> e2;
  EdgeSet3<Rat> e3;
};

struct oht_result {
  ResultRecord rec;
  std::string text;
  std::map<std::string, std::string> fields;
  double weight = 0, side = 0;
  double coord[3] = {0, 0, 0};
};

namespace {

thread_local std::string t_last_error = "no error";

oht_status fail(oht_status s, const std::string& message) {
  t_last_error = message;
  return s;
}

template <class F>
oht_status guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return fail(OHT_ERR_PARSE, e.what());
  } catch (const NonMonotoneTime& e) {
    return fail(OHT_ERR_NON_MONOTONE_TIME, e.what());
  } catch (const NonOrthogonalStep& e) {
    return fail(OHT_ERR_NON_ORTHOGONAL_STEP, e.what());
  } catch (const EmptyTrajectory& e) {
    return fail(OHT_ERR_EMPTY_TRAJECTORY, e.what());
  } catch (const IoError& e) {
    return fail(OHT_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(OHT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(OHT_ERR_INTERNAL, e.what());
  }
}

// Builds the edge-set form, reporting validation failures with the source
// line of the offending vertex.
oht_status from_parsed(ParsedTrajectory parsed, oht_trajectory** out) {
  auto* t = new oht_trajectory;
  t->parsed = std::move(parsed);
  try {
    if (t->parsed.dim == 2)
      t->e2 = build_edge_set(t->parsed.v2);
    else
      t->e3 = build_edge_set(t->parsed.v3);
  } catch (const NonMonotoneTime& e) {
    const auto line = t->parsed.source_lines.at(e.index);
    delete t;
    return fail(OHT_ERR_NON_MONOTONE_TIME,
                "line " + std::to_string(line) + ": timestamp not strictly increasing");
  } catch (const NonOrthogonalStep& e) {
    const auto line = t->parsed.source_lines.at(e.index);
    delete t;
    return fail(OHT_ERR_NON_ORTHOGONAL_STEP,
                "line " + std::to_string(line) + ": step changes more than one coordinate");
  } catch (...) {
    delete t;
    throw;
  }
  *out = t;
  return OHT_OK;
}

oht_result* build_result(ResultRecord rec) {
  auto* r = new oht_result;
  r->rec = std::move(rec);
  r->text = render_result(r->rec);
  r->fields = {{"algorithm", r->rec.algorithm},
               {"dim", std::to_string(r->rec.dim)},
               {"mode", r->rec.mode},
               {"side", r->rec.side},
               {"x", r->rec.corner[0]},
               {"y", r->rec.corner[1]},
               {"z", r->rec.corner[2]},
               {"weight", r->rec.weight},
               {"x_decimal", r->rec.corner_decimal[0]},
               {"y_decimal", r->rec.corner_decimal[1]},
               {"z_decimal", r->rec.corner_decimal[2]},
               {"weight_decimal", r->rec.weight_decimal},
               {"events", std::to_string(r->rec.events)},
               {"winner_changes", std::to_string(r->rec.winner_changes)},
               {"stale_events", std::to_string(r->rec.stale_events)},
               {"runtime_ns", std::to_string(r->rec.runtime_ns)}};
  r->weight = Num<double>::from_text(r->rec.weight);
  r->side = Num<double>::from_text(r->rec.side);
  for (int i = 0; i < 3; ++i) r->coord[i] = Num<double>::from_text(r->rec.corner[i]);
  return r;
}

const char* algo_name(oht_algo a) {
  switch (a) {
    case OHT_ALGO_EXACT: return "exact";
    case OHT_ALGO_QUARTER: return "quarter";
    case OHT_ALGO_HALF: return "half";
  }
  return nullptr;
}

template <class R>
Placement<R> run_2d(const EdgeSet2<R>& t, oht_algo algo, const R& s, RunCounters& c,
                    const SweepHooks<R>* hooks) {
  switch (algo) {
    case OHT_ALGO_EXACT: return exact_hotspot_2d(t, s);
    case OHT_ALGO_QUARTER: return quarter_hotspot(t, s, &c);
    default: break;
  }
  if (hooks && hooks->trace) {
    // Trace the horizontal sweeps directly; candidates re-scored as usual.
    auto [hset, vset] = partition(t);
    std::optional<Placement<R>> best;
    const auto offer = [&](Placement<R> p) {
      p.weight = square_weight(t, p);
      if (!best || p.weight > best->weight) best = p;
    };
    if (!hset.empty()) offer(half_hotspot_horizontal(hset, s, &c, hooks));
    if (!vset.empty())
      offer(rotate_square(half_hotspot_horizontal(rotate(vset, 1), s, &c, hooks), 3));
    return *best;
  }
  return half_hotspot(t, s, &c);
}

template <class R>
Placement<R> run_3d(const EdgeSet3<R>& t, oht_algo algo, const R& s, RunCounters& c) {
  switch (algo) {
    case OHT_ALGO_EXACT: return exact_hotspot_3d(t, s);
    case OHT_ALGO_QUARTER:
      return cube_hotspot<R>(t, s, [&](const EdgeSet2<R>& f, const R& side) {
        return quarter_hotspot(f, side, &c);
      });
    default:
      return cube_hotspot<R>(t, s, [&](const EdgeSet2<R>& f, const R& side) {
        return half_hotspot(f, side, &c);
      });
  }
}

}  // namespace

extern "C" {

const char* oht_status_name(oht_status status) {
  switch (status) {
    case OHT_OK: return "ok";
    case OHT_ERR_PARSE: return "parse error";
    case OHT_ERR_NON_MONOTONE_TIME: return "non-monotone timestamps";
    case OHT_ERR_NON_ORTHOGONAL_STEP: return "non-orthogonal step";
    case OHT_ERR_EMPTY_TRAJECTORY: return "empty trajectory";
    case OHT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OHT_ERR_IO: return "i/o error";
    case OHT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* oht_last_error(void) { return t_last_error.c_str(); }

oht_status oht_trajectory_parse_text(const char* text, oht_trajectory** out) {
  if (!text || !out) return fail(OHT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return from_parsed(parse_trajectory_text(text), out); });
}

oht_status oht_trajectory_load(const char* path, oht_trajectory** out) {
  if (!path || !out) return fail(OHT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return from_parsed(load_trajectory(path), out); });
}

oht_status oht_trajectory_save(const oht_trajectory* t, const char* path) {
  if (!t || !path) return fail(OHT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    save_trajectory(t->parsed, path);
    return OHT_OK;
  });
}

oht_status oht_trajectory_generate(const char* kind, uint64_t n, uint64_t seed, int dim,
                                   oht_trajectory** out) {
  if (!kind || !out) return fail(OHT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string k = kind;
    ParsedTrajectory parsed;
    if (k == "walk")
      parsed = gen_walk(n, seed, dim);
    else if (k == "cluster")
      parsed = gen_cluster(n, seed, 0.8, dim);
    else if (k == "comb")
      parsed = gen_comb(n, dim);
    else
      return fail(OHT_ERR_INVALID_ARGUMENT, "unknown generator kind '" + k + "'");
    return from_parsed(std::move(parsed), out);
  });
}

int oht_trajectory_dim(const oht_trajectory* t) { return t ? t->parsed.dim : 0; }

size_t oht_trajectory_edge_count(const oht_trajectory* t) {
  if (!t) return 0;
  return t->parsed.dim == 2 ? t->e2.size() : t->e3.size();
}

double oht_trajectory_total_duration(const oht_trajectory* t) {
  if (!t) return 0;
  return rat_to_double(t->parsed.dim == 2 ? t->e2.total_duration() : t->e3.total_duration());
}

oht_status oht_trajectory_edge(const oht_trajectory* t, size_t index, double a[3], double b[3],
                               double* duration) {
  if (!t || !a || !b || !duration) return fail(OHT_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= oht_trajectory_edge_count(t))
    return fail(OHT_ERR_INVALID_ARGUMENT, "edge index out of range");
  if (t->parsed.dim == 2) {
    const auto& e = t->e2.edges[index];
    a[0] = rat_to_double(e.a.x);
    a[1] = rat_to_double(e.a.y);
    a[2] = 0;
    b[0] = rat_to_double(e.b.x);
    b[1] = rat_to_double(e.b.y);
    b[2] = 0;
    *duration = rat_to_double(e.duration);
  } else {
    const auto& e = t->e3.edges[index];
    a[0] = rat_to_double(e.a.x);
    a[1] = rat_to_double(e.a.y);
    a[2] = rat_to_double(e.a.z);
    b[0] = rat_to_double(e.b.x);
    b[1] = rat_to_double(e.b.y);
    b[2] = rat_to_double(e.b.z);
    *duration = rat_to_double(e.duration);
  }
  return OHT_OK;
}

void oht_trajectory_free(oht_trajectory* t) { delete t; }

oht_status oht_find_hotspot(const oht_trajectory* t, oht_algo algo, const char* side,
                            oht_mode mode, const char* trace_path, oht_result** out) {
  if (!t || !side || !out) return fail(OHT_ERR_INVALID_ARGUMENT, "null argument");
  if (!algo_name(algo)) return fail(OHT_ERR_INVALID_ARGUMENT, "unknown algorithm");
  if (mode != OHT_MODE_EXACT && mode != OHT_MODE_FLOAT)
    return fail(OHT_ERR_INVALID_ARGUMENT, "unknown mode");
  if (trace_path && (algo != OHT_ALGO_HALF || t->parsed.dim != 2))
    return fail(OHT_ERR_INVALID_ARGUMENT,
                "event tracing is only available for the half algorithm on 2D input");
  return guarded([&]() -> oht_status {
    RunCounters counters;
    std::ofstream trace_out;
    if (trace_path) {
      trace_out.open(trace_path);
      if (!trace_out) throw IoError(std::string("cannot open '") + trace_path + "' for writing");
      trace_out << "# orthohot kinetic trace v1\n";
    }
    const auto t0 = std::chrono::steady_clock::now();
    ResultRecord rec;
    if (mode == OHT_MODE_EXACT) {
      const Rat s = rat_from_text(side);
      if (!(s > 0)) return fail(OHT_ERR_INVALID_ARGUMENT, "side must be positive");
      Placement<Rat> p;
      if (t->parsed.dim == 2) {
        SweepHooks<Rat> hooks;
        hooks.trace = trace_path ? &trace_out : nullptr;
        p = run_2d(t->e2, algo, s, counters, trace_path ? &hooks : nullptr);
      } else {
        p = run_3d(t->e3, algo, s, counters);
      }
      const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      rec = make_record(algo_name(algo), "exact", p, counters, static_cast<uint64_t>(ns));
    } else {
      const double s = Num<double>::from_text(side);
      if (!(s > 0)) return fail(OHT_ERR_INVALID_ARGUMENT, "side must be positive");
      Placement<double> p;
      if (t->parsed.dim == 2) {
        const EdgeSet2<double> flat = to_double(t->e2);
        SweepHooks<double> hooks;
        hooks.trace = trace_path ? &trace_out : nullptr;
        p = run_2d(flat, algo, s, counters, trace_path ? &hooks : nullptr);
      } else {
        const EdgeSet3<double> solid = to_double(t->e3);
        p = run_3d(solid, algo, s, counters);
      }
      const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      rec = make_record(algo_name(algo), "float", p, counters, static_cast<uint64_t>(ns));
    }
    *out = build_result(std::move(rec));
    return OHT_OK;
  });
}

const char* oht_result_text(const oht_result* r) { return r ? r->text.c_str() : ""; }

const char* oht_result_field(const oht_result* r, const char* key) {
  if (!r || !key) return nullptr;
  const auto it = r->fields.find(key);
  return it == r->fields.end() ? nullptr : it->second.c_str();
}

int oht_result_dim(const oht_result* r) { return r ? r->rec.dim : 0; }
double oht_result_weight(const oht_result* r) { return r ? r->weight : 0; }
double oht_result_coord(const oht_result* r, int axis) {
  return r && axis >= 0 && axis < 3 ? r->coord[axis] : 0;
}
double oht_result_side(const oht_result* r) { return r ? r->side : 0; }
uint64_t oht_result_events(const oht_result* r) { return r ? r->rec.events : 0; }
uint64_t oht_result_winner_changes(const oht_result* r) { return r ? r->rec.winner_changes : 0; }
uint64_t oht_result_stale_events(const oht_result* r) { return r ? r->rec.stale_events : 0; }
uint64_t oht_result_runtime_ns(const oht_result* r) { return r ? r->rec.runtime_ns : 0; }

oht_status oht_result_parse_text(const char* text, oht_result** out) {
  if (!text || !out) return fail(OHT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = build_result(parse_result_text(text));
    return OHT_OK;
  });
}

oht_status oht_result_load(const char* path, oht_result** out) {
  if (!path || !out) return fail(OHT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = build_result(load_result(path));
    return OHT_OK;
  });
}

void oht_result_free(oht_result* r) { delete r; }

oht_status oht_plot_svg(const oht_trajectory* t, const oht_result* result, const char* out_path) {
  if (!t || !out_path) return fail(OHT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<SvgBox> box;
    if (result)
      box = SvgBox{oht_result_coord(result, 0), oht_result_coord(result, 1),
                   oht_result_side(result)};
    write_file(out_path, render_svg(t->parsed, box));
    return OHT_OK;
  });
}

}  // extern "C"
