// Copyright 2026 The antiembed Authors
//
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

#include "antiembed/convex.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace antiembed {

ConvexDigraph::ConvexDigraph(Digraph d, std::vector<VertexId> order)
    : d_(std::move(d)), order_(std::move(order)) {
  const int n = d_.order();
  if (static_cast<int>(order_.size()) != n) throw InvalidInput("circular order has wrong length");
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const VertexId v = order_[i];
    if (v < 0 || v >= n || pos_[v] >= 0) throw InvalidInput("circular order is not a permutation");
    pos_[v] = i;
  }
}

ConvexDigraph ConvexDigraph::with_id_order(const Digraph& d) {
  std::vector<VertexId> order(d.order());
  std::iota(order.begin(), order.end(), 0);
  return ConvexDigraph(d, std::move(order));
}

ConvexDigraph ConvexDigraph::with_random_order(const Digraph& d, std::uint64_t seed) {
  std::vector<VertexId> order(d.order());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return ConvexDigraph(d, std::move(order));
}

SideSets side_sets(const ConvexDigraph& c, Arc arc) {
  const int n = c.digraph().order();
  if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n || arc.tail == arc.head) {
    throw InvalidInput("side_sets: endpoints must be distinct vertices of the digraph");
  }
  SideSets s;
  s.arc = arc;
  const int gap = c.clockwise_steps(arc.tail, arc.head);
  for (VertexId w = 0; w < n; ++w) {
    if (w == arc.tail || w == arc.head) continue;
    (c.clockwise_steps(arc.tail, w) < gap ? s.left : s.right).push_back(w);
  }
  return s;
}

int GoodArcTable::arc_index(VertexId tail, VertexId head) const {
  const auto outs = convex_.digraph().out_neighbors(tail);
  const auto it = std::lower_bound(outs.begin(), outs.end(), head);
  if (it == outs.end() || *it != head) return -1;
  return offset_[tail] + static_cast<int>(it - outs.begin());
}

// Host arc carrying the pair (x, y) = (image of s_j, image of s_{j-1}).
Arc GoodArcTable::stage_arc(int stage, VertexId x, VertexId y) const {
  return tree_.sign(spine_.spine[stage]) == Sign::Plus ? Arc{x, y} : Arc{y, x};
}

// Neighbours of x in the direction of s_j's sign, ordered starting right after
// x and walking clockwise for even j, counter-clockwise for odd j.
std::vector<VertexId> GoodArcTable::tau(int j, VertexId x) const {
  const Sign s = tree_.sign(spine_.spine[j]);
  const auto nb = convex_.digraph().neighbors(x, s);
  std::vector<VertexId> out(nb.begin(), nb.end());
  const bool clockwise = j % 2 == 0;
  auto key = [&](VertexId w) {
    return clockwise ? convex_.clockwise_steps(x, w) : convex_.clockwise_steps(w, x);
  };
  std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) { return key(a) < key(b); });
  return out;
}

std::vector<Arc> GoodArcTable::good_arcs(int stage) const {
  if (stage < 1 || stage > stages()) throw InvalidInput("stage out of range");
  std::vector<Arc> out;
  const auto& arcs = convex_.digraph();
  for (VertexId u = 0; u < arcs.order(); ++u) {
    const auto outs = arcs.out_neighbors(u);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if (pred_[stage - 1][offset_[u] + i] != -1) out.push_back({u, outs[i]});
    }
  }
  return out;
}

bool GoodArcTable::is_good(Arc a) const {
  const int idx = arc_index(a.tail, a.head);
  return idx >= 0 && pred_.back()[idx] != -1;
}

Embedding GoodArcTable::stage_witness(int stage, Arc host_arc) const {
  if (stage < 1 || stage > stages()) throw InvalidInput("stage out of range");
  int idx = arc_index(host_arc.tail, host_arc.head);
  if (idx < 0 || pred_[stage - 1][idx] == -1) throw InvalidInput("arc is not good at this stage");
  const auto& sp = spine_.spine;
  Embedding e;
  e.map.assign(tree_.order(), -1);
  auto pair_of = [&](int j, Arc a) {
    return tree_.sign(sp[j]) == Sign::Plus ? std::pair{a.tail, a.head} : std::pair{a.head, a.tail};
  };
  auto [x, y] = pair_of(stage, host_arc);
  e.map[sp[stage]] = x;
  e.map[sp[stage - 1]] = y;
  for (int j = stage - 1; j >= 1; --j) {
    const int p_idx = pred_[j][idx];
    if (p_idx < 0) throw InternalAssertion("good-arc-link", "missing predecessor at stage " + std::to_string(j));
    // Recover the predecessor arc from its index.
    const auto& d = convex_.digraph();
    const VertexId tail = static_cast<VertexId>(
        std::upper_bound(offset_.begin(), offset_.end(), p_idx) - offset_.begin() - 1);
    const Arc pa{tail, d.out_neighbors(tail)[p_idx - offset_[tail]]};
    auto [px, py] = pair_of(j, pa);
    if (px != y) throw InternalAssertion("good-arc-link", "predecessor does not share the pivot vertex");
    const auto order = tau(j, px);
    const int p = static_cast<int>(std::find(order.begin(), order.end(), py) - order.begin());
    const int m = tree_.degree(sp[j]) - 1;
    if (p - m < 0 || order[p - m] != x) throw InternalAssertion("good-arc-link", "shift target mismatch");
    const auto& leaves = spine_.leaves_at[sp[j]];
    for (std::size_t i = 0; i < leaves.size(); ++i) e.map[leaves[i]] = order[p - m + 1 + i];
    e.map[sp[j - 1]] = py;
    x = px;
    y = py;
    idx = p_idx;
  }
  return e;
}

Embedding GoodArcTable::witness(Arc host_arc) const { return stage_witness(stages(), host_arc); }

GoodArcTable compute_good_arcs(const ConvexDigraph& c, const AntiTree& t, GoodArcVariant variant) {
  GoodArcTable tab;
  tab.convex_ = c;
  tab.tree_ = t;
  tab.variant_ = variant;
  tab.spine_ = caterpillar_decompose(t);
  const Digraph& d = c.digraph();
  const int n = d.order();
  const int a = d.size();
  tab.offset_.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) tab.offset_[u + 1] = tab.offset_[u] + d.out_degree(u);
  const auto& sp = tab.spine_.spine;
  const int L = static_cast<int>(sp.size()) - 1;

  tab.pred_.assign(1, std::vector<int>(a, -2));
  for (int j = 1; j < L; ++j) {
    const int m = t.degree(sp[j]) - 1;
    std::vector<int> next(a, -1);
    std::vector<std::vector<VertexId>> tau_cache(n);
    std::vector<char> cached(n, 0);
    const auto& cur = tab.pred_.back();
    for (VertexId u = 0; u < n; ++u) {
      const auto outs = d.out_neighbors(u);
      for (std::size_t i = 0; i < outs.size(); ++i) {
        const int ai = tab.offset_[u] + static_cast<int>(i);
        if (cur[ai] == -1) continue;
        const bool plus = t.sign(sp[j]) == Sign::Plus;
        const VertexId x = plus ? u : outs[i];
        const VertexId y = plus ? outs[i] : u;
        if (!cached[x]) {
          tau_cache[x] = tab.tau(j, x);
          cached[x] = 1;
        }
        const auto& order = tau_cache[x];
        const int p = static_cast<int>(std::find(order.begin(), order.end(), y) - order.begin());
        if (p < m) continue;  // nasty
        const VertexId z = order[p - m];
        const Arc na = tab.stage_arc(j + 1, z, x);
        const int ni = tab.arc_index(na.tail, na.head);
        if (ni < 0) throw InternalAssertion("phi-arc", "shifted pair is not a host arc");
        if (next[ni] != -1) throw InternalAssertion("phi-injective", "two good arcs shift onto one");
        next[ni] = ai;
      }
    }
    tab.pred_.push_back(std::move(next));
  }

  const int k = t.k();
  if (variant == GoodArcVariant::Density) {
    tab.lower_bound_ = static_cast<long>(a) - static_cast<long>(k - 1) * n;
  } else {
    const auto [dp, dm] = plus_minus_sets(d);
    const long tp = static_cast<long>(t.plus_vertices().size());
    const long tm = static_cast<long>(t.minus_vertices().size());
    tab.lower_bound_ = a - (tp - 1) * static_cast<long>(dm.size()) - (tm - 1) * static_cast<long>(dp.size());
  }
  const long found = static_cast<long>(tab.final_good().size());
  if (found < tab.lower_bound_) {
    throw InternalAssertion("good-arc-bound", "found " + std::to_string(found) +
                                                  " good arcs, bound is " + std::to_string(tab.lower_bound_));
  }
  return tab;
}

std::vector<Arc> brute_force_good_arcs(const ConvexDigraph& c, const AntiTree& t) {
  const SpineDecomposition sd = caterpillar_decompose(t);
  const Digraph& d = c.digraph();
  const VertexId fin = sd.final_vertex;
  const VertexId pen = sd.spine[sd.spine.size() - 2];
  const bool odd = sd.spine.size() % 2 == 1;
  const RootedAntiTree r = rooted_view(t, fin);
  const auto& order = r.bfs_order;
  std::vector<VertexId> img(t.order(), -1);
  std::vector<char> used(d.order(), 0);
  std::set<Arc> good;

  auto record = [&] {
    const VertexId x = img[fin], y = img[pen];
    const int gap = c.clockwise_steps(x, y);
    for (VertexId tv = 0; tv < t.order(); ++tv) {
      const VertexId w = img[tv];
      if (w == x || w == y) continue;
      const bool left = c.clockwise_steps(x, w) < gap;
      if (left == odd) return;  // image on the side that must stay empty
    }
    good.insert(t.sign(fin) == Sign::Plus ? Arc{x, y} : Arc{y, x});
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      record();
      return;
    }
    const VertexId tv = order[i];
    auto try_host = [&](VertexId h) {
      if (used[h]) return;
      used[h] = 1;
      img[tv] = h;
      self(self, i + 1);
      img[tv] = -1;
      used[h] = 0;
    };
    if (i == 0) {
      for (VertexId h = 0; h < d.order(); ++h) try_host(h);
    } else {
      const VertexId p = r.parent[tv];
      for (VertexId h : d.neighbors(img[p], t.sign(p))) try_host(h);
    }
  };
  rec(rec, 0);
  return {good.begin(), good.end()};
}

namespace {

ConvexDigraph draw(const Digraph& d, const CaterpillarOptions& opt) {
  return opt.random_order_seed ? ConvexDigraph::with_random_order(d, *opt.random_order_seed)
                               : ConvexDigraph::with_id_order(d);
}

Embedding embed_from_table(const GoodArcTable& tab, const Digraph& d, const AntiTree& t) {
  const auto good = tab.final_good();
  if (good.empty()) throw InternalAssertion("good-arc-empty", "no good arc although the bound is positive");
  Embedding e = tab.witness(good.front());
  const auto check = check_embedding(t.digraph(), d, e);
  if (!check.ok) throw InternalAssertion("good-arc-witness", check.reason);
  return e;
}

}  // namespace

Embedding embed_caterpillar(const Digraph& d, const AntiTree& t, const CaterpillarOptions& opt) {
  const long k = t.k();
  if (static_cast<long>(d.size()) <= (k - 1) * d.order()) {
    throw HypothesisViolated("embed_caterpillar needs more than (k-1)n = " +
                             std::to_string((k - 1) * d.order()) + " arcs, host has " +
                             std::to_string(d.size()));
  }
  return embed_from_table(good_arcs(draw(d, opt), t), d, t);
}

Embedding embed_caterpillar_mindeg(const Digraph& d, const AntiTree& t, const CaterpillarOptions& opt) {
  const long k = t.k();
  const auto [dp, dm] = plus_minus_sets(d);
  const long np = static_cast<long>(dp.size()), nm = static_cast<long>(dm.size());
  if (2L * d.size() <= (k - 1) * (np + nm)) {
    throw HypothesisViolated("embed_caterpillar_mindeg needs 2a(D) > (k-1)(|D+|+|D-|)");
  }
  const long tp = static_cast<long>(t.plus_vertices().size());
  const long tm = static_cast<long>(t.minus_vertices().size());
  if (np <= nm && tp <= tm) return embed_from_table(good_arcs_mindeg(draw(d, opt), t), d, t);
  if (np >= nm && tp >= tm) {
    const Digraph rd = reverse(d);
    const AntiTree rt = reverse_tree(t);
    return embed_from_table(good_arcs_mindeg(draw(rd, opt), rt), rd, rt);
  }
  throw HypothesisViolated("embed_caterpillar_mindeg: sign balance of host and tree disagree");
}

}  // namespace antiembed
