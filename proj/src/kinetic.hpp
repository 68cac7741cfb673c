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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <vector>

#include "contribution.hpp"
#include "trajectory.hpp"

namespace orthohot {

template <class R>
struct SweepEvent {
  R x;
  int rank;  // 0: contribution update, 1: certificate failure, 2: point edge leaves
  std::size_t id;        // edge id (ranks 0/2) or node id (rank 1)
  std::uint64_t tag = 0; // updates: index of the edge's piece; failures: node version
};

template <class R>
struct SweepEventAfter {
  bool operator()(const SweepEvent<R>& a, const SweepEvent<R>& b) const {
    if (a.x != b.x) return a.x > b.x;
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.id > b.id;
  }
};

template <class R>
using EventQueue =
    std::priority_queue<SweepEvent<R>, std::vector<SweepEvent<R>>, SweepEventAfter<R>>;

enum class EventKind { update, failure, stale };

/// Segment tree over the intervals [y_e - s, y_e] of a horizontal
/// trajectory, with a kinetic tournament layered on top.
///
/// Leaves are the elementary intervals of the segment endpoints (point
/// intervals at each endpoint, open intervals in between). Each node v
/// carries the sum function s_v of the segments stored at v and the winner
/// function f_v: for a leaf f_v = s_v, otherwise f_v = s_v + f_u for the
/// child u currently ahead. The sum of s_v along a root-to-leaf path is
/// exactly the weight of the sweep square whose lower side is at the leaf's
/// v_y, so the root's winner function tracks the best tracked square.
///
/// Winner comparisons order children by (value at x, slope, lower leaf
/// index). Breaking value ties by slope means a scheduled certificate
/// crossing is always strictly in the future, which rules out event loops
/// at tangencies; superseded certificates are invalidated by per-node
/// version counters rather than queue deletions.
template <class R>
class KineticTree {
 public:
  struct Node {
    int left = -1, right = -1, parent = -1;
    int leaf_lo = 0, leaf_hi = 0;  // range of leaf indices below this node
    LinearFn<R> sum, win;
    int winner = -1;  // leaf index
    std::uint64_t version = 0;
    std::vector<int> stored;  // ids of segments kept exactly at this node
  };

  KineticTree(const EdgeSet2<R>& h, const R& s) : side_(s) {
    if (h.empty()) throw EmptyTrajectory{};
    const std::size_t n = h.size();
    segments_.reserve(n);
    horizon_ = h.edges.front().xmax();
    for (const auto& e : h.edges) {
      if (e.orientation == Axis::y) throw VerticalEdge{};
      segments_.push_back({R(e.y() - s), e.y()});
      if (e.xmax() > horizon_) horizon_ = e.xmax();
    }
    bounds_.reserve(2 * n);
    for (const auto& g : segments_) {
      bounds_.push_back(g.first);
      bounds_.push_back(g.second);
    }
    std::sort(bounds_.begin(), bounds_.end());
    bounds_.erase(std::unique(bounds_.begin(), bounds_.end()), bounds_.end());

    const int m = static_cast<int>(bounds_.size());
    const int leaves = 2 * m - 1;
    leaf_vy_.reserve(leaves);
    for (int k = 0; k < leaves; ++k) {
      if (k % 2 == 0)
        leaf_vy_.push_back(bounds_[k / 2]);
      else
        leaf_vy_.push_back(R((bounds_[k / 2] + bounds_[k / 2 + 1]) / 2));
    }
    leaf_node_.assign(leaves, -1);
    nodes_.reserve(2 * leaves - 1);
    root_ = build(0, leaves - 1);
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      if (nodes_[v].left >= 0) nodes_[nodes_[v].left].parent = static_cast<int>(v);
      if (nodes_[v].right >= 0) nodes_[nodes_[v].right].parent = static_cast<int>(v);
    }

    current_.assign(n, LinearFn<R>{});
    touched_.resize(n);
    segleaf_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int lo = 2 * index_of(segments_[i].first);
      const int hi = 2 * index_of(segments_[i].second);
      segleaf_[i] = lo;
      insert(root_, lo, hi, static_cast<int>(i), touched_[i]);
    }
  }

  int root() const { return root_; }
  int leaf_count() const { return static_cast<int>(leaf_vy_.size()); }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t segment_count() const { return segments_.size(); }
  const Node& node(int v) const { return nodes_[v]; }
  int node_for_leaf(int leaf) const { return leaf_node_[leaf]; }
  const R& leaf_vy(int leaf) const { return leaf_vy_[leaf]; }
  int segleaf(std::size_t edge) const { return segleaf_.at(edge); }
  const std::pair<R, R>& segment(std::size_t edge) const { return segments_.at(edge); }
  const LinearFn<R>& current_fn(std::size_t edge) const { return current_.at(edge); }
  const R& side() const { return side_; }

  /// Every segment id whose interval [y_e - s, y_e] contains q, i.e. every
  /// edge intersecting the sweep square whose lower side is at q.
  std::vector<int> stab(const R& q) const {
    std::vector<int> out;
    if (bounds_.empty() || q < bounds_.front() || q > bounds_.back()) return out;
    const auto it = std::lower_bound(bounds_.begin(), bounds_.end(), q);
    const int j = static_cast<int>(it - bounds_.begin());
    const int target = (*it == q) ? 2 * j : 2 * j - 1;
    int v = root_;
    while (true) {
      const Node& nd = nodes_[v];
      out.insert(out.end(), nd.stored.begin(), nd.stored.end());
      if (nd.left < 0) break;
      v = target <= nodes_[nd.left].leaf_hi ? nd.left : nd.right;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Installs a new contribution function for an edge at sweep position x:
  /// adjusts s_v at the edge's canonical nodes and re-decides winners along
  /// the affected root paths, rescheduling certificates where f changed.
  void process_update(EventQueue<R>& q, std::size_t edge, const R& x, const LinearFn<R>& fn,
                      RunCounters& c) {
    if (edge >= current_.size()) throw UnknownEdge{edge};
    ++c.events;
    const LinearFn<R> delta = fn - current_[edge];
    current_[edge] = fn;
    if (delta.is_zero()) return;
    for (const auto& [v, canonical] : touched_[edge]) {
      if (canonical) nodes_[v].sum += delta;
      recompute(v, x, q, c);
    }
  }

  /// Handles a certificate failure scheduled for `node` at version
  /// `version`. Stale versions are dropped silently; otherwise the winner is
  /// re-decided and the change propagates upward while it keeps changing
  /// parents.
  EventKind process_failure(EventQueue<R>& q, std::size_t node, std::uint64_t version, const R& x,
                            RunCounters& c) {
    ++c.events;
    if (node >= nodes_.size() || nodes_[node].version != version) {
      ++c.stale_events;
      return EventKind::stale;
    }
    int v = static_cast<int>(node);
    bool changed = recompute(v, x, q, c);
    while (changed && nodes_[v].parent >= 0) {
      v = nodes_[v].parent;
      changed = recompute(v, x, q, c);
    }
    return EventKind::failure;
  }

 private:
  int build(int lo, int hi) {
    const int idx = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[idx].leaf_lo = lo;
    nodes_[idx].leaf_hi = hi;
    if (lo == hi) {
      nodes_[idx].winner = lo;
      leaf_node_[lo] = idx;
      return idx;
    }
    const int mid = lo + (hi - lo) / 2;
    const int l = build(lo, mid);
    const int r = build(mid + 1, hi);
    nodes_[idx].left = l;
    nodes_[idx].right = r;
    nodes_[idx].winner = lo;  // all functions start at zero; lowest leaf wins
    return idx;
  }

  int index_of(const R& value) const {
    return static_cast<int>(std::lower_bound(bounds_.begin(), bounds_.end(), value) -
                            bounds_.begin());
  }

  // Canonical decomposition of the leaf range [qlo, qhi]; records the
  // visited nodes in postorder so updates can be replayed bottom-up.
  void insert(int v, int qlo, int qhi, int edge, std::vector<std::pair<int, bool>>& out) {
    Node& nd = nodes_[v];
    if (qlo <= nd.leaf_lo && nd.leaf_hi <= qhi) {
      nd.stored.push_back(edge);
      out.push_back({v, true});
      return;
    }
    const Node& l = nodes_[nd.left];
    if (qlo <= l.leaf_hi && l.leaf_lo <= qhi) insert(nd.left, qlo, qhi, edge, out);
    const Node& r = nodes_[nd.right];
    if (qlo <= r.leaf_hi && r.leaf_lo <= qhi) insert(nd.right, qlo, qhi, edge, out);
    out.push_back({v, false});
  }

  // Child whose winner function is ahead at x: larger value, then larger
  // slope, then the left child (its leaves have the lower indices).
  int pick_child(int v, const R& x) const {
    const Node& l = nodes_[nodes_[v].left];
    const Node& r = nodes_[nodes_[v].right];
    const R vl = l.win(x), vr = r.win(x);
    if (vl != vr) return vl > vr ? nodes_[v].left : nodes_[v].right;
    if (l.win.slope != r.win.slope)
      return l.win.slope > r.win.slope ? nodes_[v].left : nodes_[v].right;
    return nodes_[v].left;
  }

  // Re-decides f_v and the winner at x. A recompute is only ever triggered
  // when a descendant's function may have changed, so the node's certificate
  // is invalidated and rescheduled even when f_v and the winner stay put:
  // the crossing with the loser child may still have moved.
  bool recompute(int v, const R& x, EventQueue<R>& q, RunCounters& c) {
    Node& nd = nodes_[v];
    LinearFn<R> win;
    int winner;
    if (nd.left < 0) {
      win = nd.sum;
      winner = nd.leaf_lo;
    } else {
      const int ch = pick_child(v, x);
      win = nd.sum + nodes_[ch].win;
      winner = nodes_[ch].winner;
    }
    const bool changed = !(win == nd.win && winner == nd.winner);
    if (winner != nd.winner) ++c.winner_changes;
    nd.win = std::move(win);
    nd.winner = winner;
    ++nd.version;
    if (nd.left >= 0) schedule(v, x, q);
    return changed;
  }

  // Schedules the next crossing of the children's winner functions, if any.
  // By the tie-breaking order the crossing is strictly after x. Crossings
  // beyond the last update event are dropped: every contribution is
  // identically zero there, so no later winner change can matter (and in
  // float mode near-parallel functions would otherwise schedule events at
  // astronomical coordinates).
  void schedule(int v, const R& x, EventQueue<R>& q) {
    const Node& nd = nodes_[v];
    const int wchild = nd.winner <= nodes_[nd.left].leaf_hi ? nd.left : nd.right;
    const int lchild = wchild == nd.left ? nd.right : nd.left;
    const LinearFn<R>& fw = nodes_[wchild].win;
    const LinearFn<R>& fl = nodes_[lchild].win;
    if (fl.slope > fw.slope) {
      const R xc = R((fw.intercept - fl.intercept) / (fl.slope - fw.slope));
      if (xc > x && xc <= horizon_) q.push({xc, 1, static_cast<std::size_t>(v), nd.version});
    }
  }

  R side_;
  R horizon_{};                            // last update event: max edge x
  std::vector<std::pair<R, R>> segments_;  // per edge: [y_e - s, y_e]
  std::vector<R> bounds_;                  // distinct segment endpoints, sorted
  std::vector<R> leaf_vy_;                 // midpoint of each elementary interval
  std::vector<int> leaf_node_;
  std::vector<int> segleaf_;
  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<LinearFn<R>> current_;                       // per edge: installed function
  std::vector<std::vector<std::pair<int, bool>>> touched_;  // per edge: insertion path
};

/// Observation points handed to tests and the trace writer during the sweep.
/// `at_event` fires once per distinct event coordinate with all continuous
/// updates applied and point-edge exits still pending, i.e. with the tree in
/// the closed-square state at x. `between` fires at a probe strictly between
/// consecutive event coordinates.
template <class R>
struct SweepHooks {
  std::ostream* trace = nullptr;
  std::function<void(const KineticTree<R>&, const R& x)> at_event;
  std::function<void(const KineticTree<R>&, const R& x)> between;
};

namespace detail {

template <class R>
void trace_event(std::ostream* os, const KineticTree<R>& tree, const R& x, EventKind kind) {
  if (!os) return;
  const auto& root = tree.node(tree.root());
  const char* k = kind == EventKind::update ? "update"
                  : kind == EventKind::failure ? "failure"
                                               : "stale";
  *os << "x=" << Num<R>::to_text(x) << ",kind=" << k << ",winner=" << root.winner
      << ",f_root=" << Num<R>::to_text(root.win(x)) << "\n";
}

}  // namespace detail

/// Exact hotspot of a horizontal trajectory (x-parallel and point edges):
/// sweeps the kinetic tree across all update events, tracking the root's
/// winner value just before, at, and just after every event coordinate. The
/// root function is linear between events, so this running maximum is the
/// true maximum over all sweep positions.
template <class R>
Placement<R> half_hotspot_horizontal(const EdgeSet2<R>& h, const R& s,
                                     RunCounters* counters = nullptr,
                                     const SweepHooks<R>* hooks = nullptr) {
  if (h.empty()) throw EmptyTrajectory{};
  KineticTree<R> tree(h, s);
  RunCounters local;
  RunCounters& c = counters ? *counters : local;

  // Per-edge pieces, classified at interval midpoints (see corner sweep for
  // why: exact-mode equivalent, float-mode robust).
  EventQueue<R> q;
  std::vector<std::vector<LinearFn<R>>> pieces(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& e = h.edges[i];
    if (e.orientation == Axis::point) {
      pieces[i] = {{R(0), e.duration}};
      q.push({R(e.a.x - s), 0, i, 0});
      q.push({e.a.x, 2, i, 0});
    } else {
      const auto xs = update_events(e, s);
      pieces[i].reserve(xs.size());
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const R mid = k + 1 < xs.size() ? R(xs[k] + (xs[k + 1] - xs[k]) / 2) : R(xs[k] + 1);
        pieces[i].push_back(contribution_at(e, s, mid));
        q.push({xs[k], 0, i, k});
      }
    }
  }

  std::optional<Placement<R>> best;
  const auto consider = [&](const R& x) {
    const auto& root = tree.node(tree.root());
    const R w = root.win(x);
    if (!best || w > best->weight)
      best = Placement<R>{2, x, tree.leaf_vy(root.winner), R(0), s, w};
  };

  std::optional<R> prev;
  while (!q.empty()) {
    const R x = q.top().x;
    if (prev && x < *prev) throw std::logic_error("event queue went backwards");
    consider(x);
    while (!q.empty() && q.top().x == x && q.top().rank <= 1) {
      const SweepEvent<R> ev = q.top();
      q.pop();
      EventKind kind;
      if (ev.rank == 0) {
        tree.process_update(q, ev.id, x, pieces[ev.id][ev.tag], c);
        kind = EventKind::update;
      } else {
        kind = tree.process_failure(q, ev.id, ev.tag, x, c);
      }
      if (hooks) detail::trace_event(hooks->trace, tree, x, kind);
    }
    consider(x);
    if (hooks && hooks->at_event) hooks->at_event(tree, x);
    while (!q.empty() && q.top().x == x) {  // point edges leaving at x
      const SweepEvent<R> ev = q.top();
      q.pop();
      tree.process_update(q, ev.id, x, LinearFn<R>{}, c);
      if (hooks) detail::trace_event(hooks->trace, tree, x, EventKind::update);
    }
    consider(x);
    if (hooks && hooks->between && !q.empty()) {
      const R probe = R((x + q.top().x) / 2);
      if (probe > x) hooks->between(tree, probe);
    }
    prev = x;
  }
  return *best;
}

/// 1/2-approximate hotspot of an orthogonal trajectory: exact sweep on the
/// horizontal part and on the vertical part rotated a quarter turn, both
/// candidates re-scored against the full trajectory.
template <class R>
Placement<R> half_hotspot(const EdgeSet2<R>& t, const R& s, RunCounters* counters = nullptr) {
  if (t.empty()) throw EmptyTrajectory{};
  auto [hset, vset] = partition(t);
  std::optional<Placement<R>> best;
  const auto offer = [&](Placement<R> p) {
    p.weight = square_weight(t, p);
    if (!best || p.weight > best->weight) best = p;
  };
  if (!hset.empty()) offer(half_hotspot_horizontal(hset, s, counters));
  if (!vset.empty()) offer(rotate_square(half_hotspot_horizontal(rotate(vset, 1), s, counters), 3));
  return *best;
}

}  // namespace orthohot
