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

#include "antiembed/subdigraph.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "antiembed/errors.hpp"

namespace antiembed {

// ---- prune_pseudo -----------------------------------------------------------

PruneReport prune_pseudo_report(const Digraph& d, int k, std::optional<std::uint64_t> fuzz_seed) {
  const int n = d.order();
  if (k < 1) throw InvalidInput("prune_pseudo: k must be positive");
  if (static_cast<long>(d.size()) <= static_cast<long>(k - 1) * n) {
    throw HypothesisViolated("prune_pseudo needs more than (k-1)n arcs");
  }
  std::vector<VertexSet> out(n, VertexSet(n)), in(n, VertexSet(n));
  std::vector<int> od(n, 0), id(n, 0);
  for (const Arc& a : d.arcs()) {
    out[a.tail].insert(a.head);
    in[a.head].insert(a.tail);
    ++od[a.tail];
    ++id[a.head];
  }
  std::vector<char> fired_out(n, 0), fired_in(n, 0);
  std::optional<std::mt19937_64> rng;
  if (fuzz_seed) rng.emplace(*fuzz_seed);

  PruneReport rep;
  const int step_cap = (k + 1) / 2 - 1;  // ceil(k/2) - 1
  auto low = [k](int deg) { return deg > 0 && 2 * deg < k; };
  // Trigger encoding: 2v for v's out side, 2v+1 for v's in side.
  std::vector<int> triggers;
  while (true) {
    triggers.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (low(od[v])) triggers.push_back(2 * v);
      if (low(id[v])) triggers.push_back(2 * v + 1);
      if (!rng && !triggers.empty()) break;
    }
    if (triggers.empty()) break;
    const int t = rng ? triggers[std::uniform_int_distribution<std::size_t>(0, triggers.size() - 1)(*rng)]
                      : triggers.front();
    const VertexId v = t / 2;
    const bool out_side = t % 2 == 0;
    int removed = 0;
    if (out_side) {
      if (fired_out[v]++) throw InternalAssertion("prune-pseudo-once", "out side fired twice");
      out[v].for_each([&](VertexId w) {
        in[w].erase(v);
        --id[w];
        ++removed;
      });
      out[v] = VertexSet(n);
      od[v] = 0;
      ++rep.out_triggers;
    } else {
      if (fired_in[v]++) throw InternalAssertion("prune-pseudo-once", "in side fired twice");
      in[v].for_each([&](VertexId w) {
        out[w].erase(v);
        --od[w];
        ++removed;
      });
      in[v] = VertexSet(n);
      id[v] = 0;
      ++rep.in_triggers;
    }
    if (removed > step_cap) throw InternalAssertion("prune-pseudo-step", std::to_string(removed) + " arcs in one step");
    rep.max_step = std::max(rep.max_step, removed);
    rep.deleted_arcs += removed;
  }
  if (static_cast<long>(rep.deleted_arcs) > static_cast<long>(k - 1) * n) {
    throw InternalAssertion("prune-pseudo-total", "deleted more than (k-1)n arcs");
  }
  std::vector<Arc> keep;
  for (const Arc& a : d.arcs()) {
    if (out[a.tail].contains(a.head)) keep.push_back(a);
  }
  if (keep.empty()) throw InternalAssertion("prune-pseudo-empty", "pruning removed every arc");
  rep.result = Digraph(n, keep);
  return rep;
}

// ---- bipartite --------------------------------------------------------------

std::vector<int> BipartiteGraph::a_degrees() const {
  std::vector<int> deg(universe(), 0);
  for (auto [a, b] : edges) ++deg[a];
  return deg;
}

std::vector<int> BipartiteGraph::b_degrees() const {
  std::vector<int> deg(universe(), 0);
  for (auto [a, b] : edges) ++deg[b];
  return deg;
}

BipartiteGraph split_bipartite(const Digraph& d) {
  const int n = d.order();
  BipartiteGraph h{VertexSet(n), VertexSet(n), {}};
  for (VertexId v = 0; v < n; ++v) {
    h.a_side.insert(v);
    h.b_side.insert(v);
  }
  h.edges.reserve(d.size());
  for (const Arc& a : d.arcs()) h.edges.emplace_back(a.tail, a.head);
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

Digraph merge_bipartite(const BipartiteGraph& h) {
  std::vector<Arc> arcs;
  arcs.reserve(h.edges.size());
  for (auto [a, b] : h.edges) arcs.push_back({a, b});
  return Digraph(h.universe(), arcs);
}

const char* to_string(SelectionCase c) { return c == SelectionCase::I ? "I" : "II"; }

namespace {

// Mutable working copy used by the pruning loops.
class WorkingBipartite {
 public:
  WorkingBipartite(const BipartiteGraph& h, int k) : k_(k), alive_a_(h.a_side), alive_b_(h.b_side) {
    const int n = h.universe();
    adj_a_.assign(n, {});
    adj_b_.assign(n, {});
    for (auto [a, b] : h.edges) {
      adj_a_[a].push_back(b);
      adj_b_[b].push_back(a);
    }
    deg_a_ = h.a_degrees();
    deg_b_ = h.b_degrees();
    edges_ = h.edge_count();
    vertices_ = h.vertex_count();
  }

  int n() const { return static_cast<int>(deg_a_.size()); }
  bool alive(bool a_side, VertexId v) const { return (a_side ? alive_a_ : alive_b_).contains(v); }
  int deg(bool a_side, VertexId v) const { return a_side ? deg_a_[v] : deg_b_[v]; }
  int a_count() const { return alive_a_.count(); }
  int b_count() const { return alive_b_.count(); }

  void remove(bool a_side, VertexId v) {
    if (a_side) {
      alive_a_.erase(v);
      for (VertexId b : adj_a_[v]) {
        if (alive_b_.contains(b)) --deg_b_[b];
      }
      edges_ -= deg_a_[v];
      deg_a_[v] = 0;
    } else {
      alive_b_.erase(v);
      for (VertexId a : adj_b_[v]) {
        if (alive_a_.contains(a)) --deg_a_[a];
      }
      edges_ -= deg_b_[v];
      deg_b_[v] = 0;
    }
    --vertices_;
    ++deletions_;
  }

  // Density must survive every single deletion.
  void check_density() const {
    if (2L * edges_ <= static_cast<long>(k_ - 1) * vertices_) {
      throw InternalAssertion("obs-deleting", "density lost after deletion " + std::to_string(deletions_));
    }
  }

  int deletions() const { return deletions_; }

  BipartiteGraph freeze(const BipartiteGraph& h) const {
    BipartiteGraph out{alive_a_, alive_b_, {}};
    for (auto [a, b] : h.edges) {
      if (alive_a_.contains(a) && alive_b_.contains(b)) out.edges.emplace_back(a, b);
    }
    return out;
  }

 private:
  int k_;
  VertexSet alive_a_, alive_b_;
  std::vector<std::vector<VertexId>> adj_a_, adj_b_;
  std::vector<int> deg_a_, deg_b_;
  int edges_ = 0;
  int vertices_ = 0;
  int deletions_ = 0;
};

}  // namespace

BipartitePruneResult prune_bipartite(const BipartiteGraph& h, int k, int r) {
  if (k < 1 || r < 1) throw InvalidInput("prune_bipartite: k and r must be positive");
  if (r > (k + 1) / 2) throw HypothesisViolated("prune_bipartite needs r <= ceil(k/2)");
  if (h.a_side.count() != h.b_side.count()) throw HypothesisViolated("prune_bipartite needs |A| = |B|");
  if (2L * h.edge_count() <= static_cast<long>(k - 1) * h.vertex_count()) {
    throw HypothesisViolated("prune_bipartite needs e(H) > (k-1)|H|/2");
  }
  WorkingBipartite w(h, k);
  const int n = w.n();

  // First loop: low A-vertices, then low pairs, least ids first.
  while (true) {
    VertexId hit = -1;
    for (VertexId a = 0; a < n && hit < 0; ++a) {
      if (w.alive(true, a) && 2 * w.deg(true, a) < k) hit = a;
    }
    if (hit >= 0) {
      w.remove(true, hit);
      w.check_density();
      continue;
    }
    int min_b = k;
    for (VertexId b = 0; b < n; ++b) {
      if (w.alive(false, b)) min_b = std::min(min_b, w.deg(false, b));
    }
    VertexId pa = -1, pb = -1;
    for (VertexId a = 0; a < n && pa < 0; ++a) {
      if (!w.alive(true, a) || w.deg(true, a) + min_b >= k) continue;
      for (VertexId b = 0; b < n; ++b) {
        if (w.alive(false, b) && w.deg(true, a) + w.deg(false, b) < k) {
          pa = a;
          pb = b;
          break;
        }
      }
    }
    if (pa < 0) break;
    w.remove(true, pa);
    w.remove(false, pb);
    w.check_density();
  }

  BipartitePruneResult res;
  bool low_b = false;
  for (VertexId b = 0; b < n; ++b) {
    if (w.alive(false, b) && w.deg(false, b) < r) low_b = true;
  }
  if (low_b) {
    res.second_loop = true;
    while (true) {
      int side = -1;
      VertexId hit = -1;
      for (VertexId a = 0; a < n && hit < 0; ++a) {
        if (w.alive(true, a) && 2 * w.deg(true, a) < k) hit = a, side = 1;
      }
      for (VertexId b = 0; b < n && hit < 0; ++b) {
        if (w.alive(false, b) && 2 * w.deg(false, b) < k) hit = b, side = 0;
      }
      if (hit < 0) break;
      w.remove(side == 1, hit);
      w.check_density();
    }
    res.tag = w.a_count() > w.b_count() ? SelectionCase::II : SelectionCase::I;
  } else {
    res.tag = SelectionCase::I;
  }
  res.graph = w.freeze(h);
  res.deletions = w.deletions();
  if (res.graph.edges.empty()) throw InternalAssertion("prune-bipartite-empty", "no edges left");
  return res;
}

BipartiteAudit audit_bipartite(const BipartiteGraph& original, const BipartiteGraph& sub, int k, int r) {
  BipartiteAudit au;
  const auto da = sub.a_degrees();
  const auto db = sub.b_degrees();
  const auto orig_a = original.a_degrees();
  const auto as = sub.a_side.to_vector();
  const auto bs = sub.b_side.to_vector();
  au.density = 2L * sub.edge_count() > static_cast<long>(k - 1) * sub.vertex_count();
  au.pair_sums = true;
  for (VertexId a : as) {
    for (VertexId b : bs) {
      if (da[a] + db[b] < k) au.pair_sums = false;
    }
  }
  const bool a_half = std::all_of(as.begin(), as.end(), [&](VertexId a) { return 2 * da[a] >= k; });
  const bool b_half = std::all_of(bs.begin(), bs.end(), [&](VertexId b) { return 2 * db[b] >= k; });
  const bool b_r = std::all_of(bs.begin(), bs.end(), [&](VertexId b) { return db[b] >= r; });
  const bool big_a = std::any_of(as.begin(), as.end(), [&](VertexId a) { return da[a] >= k; });
  const bool big_b = std::any_of(bs.begin(), bs.end(), [&](VertexId b) { return db[b] >= k; });
  const bool orig_ok = std::all_of(as.begin(), as.end(), [&](VertexId a) { return orig_a[a] > k - r; });
  au.case_i = a_half && b_r && big_a && as.size() <= bs.size();
  au.case_ii = a_half && b_half && big_b && orig_ok;
  return au;
}

// ---- selection --------------------------------------------------------------

SelectionAudit audit_selection(const Digraph& d, const Digraph& sub, int k, int r) {
  if (sub.order() != d.order()) throw InvalidInput("audit_selection: vertex universes differ");
  for (const Arc& a : sub.arcs()) {
    if (!d.has_arc(a.tail, a.head)) throw InvalidInput("audit_selection: arc outside the host");
  }
  SelectionAudit au;
  const auto [plus, minus] = plus_minus_sets(sub);
  au.arcs = sub.size();
  au.plus_count = static_cast<int>(plus.size());
  au.minus_count = static_cast<int>(minus.size());
  au.pseudo_out = pseudo_degree(sub, Sign::Plus);
  au.pseudo_in = pseudo_degree(sub, Sign::Minus);
  for (VertexId v = 0; v < sub.order(); ++v) {
    au.max_out = std::max(au.max_out, sub.out_degree(v));
    au.max_in = std::max(au.max_in, sub.in_degree(v));
  }
  au.min_pair_sum = (plus.empty() || minus.empty()) ? 0 : sub.out_degree(plus[0]) + sub.in_degree(minus[0]);
  for (VertexId a : plus) {
    for (VertexId b : minus) au.min_pair_sum = std::min(au.min_pair_sum, sub.out_degree(a) + sub.in_degree(b));
  }
  const bool nonempty = au.arcs > 0;
  au.density_condition = nonempty && 2L * au.arcs > static_cast<long>(k - 1) * (au.plus_count + au.minus_count);
  au.pair_sum_condition = nonempty && au.min_pair_sum >= k;
  const bool orig_ok = std::all_of(plus.begin(), plus.end(), [&](VertexId a) { return d.out_degree(a) > k - r; });
  au.case_i = nonempty && 2 * au.pseudo_out >= k && au.pseudo_in >= r && au.max_out >= k &&
              au.plus_count <= au.minus_count;
  au.case_ii = nonempty && 2 * au.pseudo_out >= k && 2 * au.pseudo_in >= k && au.max_in >= k && orig_ok;
  return au;
}

SelectionResult select_subdigraph(const Digraph& d, int k, int r) {
  const int n = d.order();
  if (k < 1 || r < 1) throw InvalidInput("select_subdigraph: k and r must be positive");
  if (r > (k + 1) / 2) throw HypothesisViolated("select_subdigraph needs r <= ceil(k/2)");
  if (k > n) throw HypothesisViolated("select_subdigraph needs k <= n");
  if (static_cast<long>(d.size()) <= static_cast<long>(k - 1) * n) {
    throw HypothesisViolated("select_subdigraph needs more than (k-1)n arcs");
  }
  const BipartitePruneResult pr = prune_bipartite(split_bipartite(d), k, r);
  SelectionResult res;
  res.sub = merge_bipartite(pr.graph);
  res.tag = pr.tag;
  res.audit = audit_selection(d, res.sub, k, r);
  const bool tag_ok = res.tag == SelectionCase::I ? res.audit.case_i : res.audit.case_ii;
  if (!res.audit.density_condition) throw InternalAssertion("selection-density", "density condition fails");
  if (!res.audit.pair_sum_condition) throw InternalAssertion("selection-pair-sum", "pair degree sum below k");
  if (!tag_ok) throw InternalAssertion("selection-case", std::string("case ") + to_string(res.tag) + " fails");
  for (VertexId v = 0; v < n && res.witness_vertex < 0; ++v) {
    const int deg = res.tag == SelectionCase::I ? res.sub.out_degree(v) : res.sub.in_degree(v);
    if (deg >= k) res.witness_vertex = v;
  }
  return res;
}

}  // namespace antiembed
