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

#include "engine.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "antiembed/errors.hpp"

namespace antiembed::detail {

Policy make_policy(const Digraph& arcs, const Digraph& core_graph, const AntiTree& t) {
  Policy p;
  p.arcs = &arcs;
  p.core = VertexSet(arcs.order());
  for (VertexId h = 0; h < core_graph.order(); ++h) {
    if (core_graph.out_degree(h) + core_graph.in_degree(h) > 0) p.core.insert(h);
  }
  p.free_vertex.assign(t.order(), 0);
  return p;
}

PartialMap::PartialMap(const AntiTree& t, const Policy& p)
    : t_(&t), p_(&p), img_(t.order(), -1), owner_(p.arcs->order(), -1), used_(p.arcs->order()) {}

void PartialMap::place(VertexId v, VertexId h) {
  if (img_[v] >= 0 || owner_[h] >= 0) {
    throw InternalAssertion("engine-place", "vertex " + std::to_string(v) + " onto " + std::to_string(h));
  }
  img_[v] = h;
  owner_[h] = v;
  used_.insert(h);
  ++count_;
}

void PartialMap::unplace(VertexId v) {
  const VertexId h = img_[v];
  if (h < 0) return;
  img_[v] = -1;
  owner_[h] = -1;
  used_.erase(h);
  --count_;
}

bool PartialMap::allowed(VertexId v, VertexId h) const {
  if (h < 0 || h >= host().order() || used_.contains(h)) return false;
  return p_->free_vertex[v] || p_->core.contains(h);
}

bool PartialMap::consistent(VertexId v, VertexId h) const {
  const bool plus = t_->sign(v) == Sign::Plus;
  for (VertexId x : t_->neighbors(v)) {
    const VertexId hx = img_[x];
    if (hx < 0) continue;
    if (plus ? !host().has_arc(h, hx) : !host().has_arc(hx, h)) return false;
  }
  return true;
}

std::vector<VertexId> PartialMap::candidates(VertexId v) const {
  std::vector<VertexId> out;
  VertexId anchor = -1;
  for (VertexId x : t_->neighbors(v)) {
    if (img_[x] >= 0) {
      anchor = x;
      break;
    }
  }
  if (anchor >= 0) {
    for (VertexId h : host().neighbors(img_[anchor], t_->sign(anchor))) {
      if (admissible(v, h)) out.push_back(h);
    }
  } else {
    for (VertexId h = 0; h < host().order(); ++h) {
      if (admissible(v, h) && host().degree(h, t_->sign(v)) > 0) out.push_back(h);
    }
  }
  if (p_->free_vertex[v]) {
    std::stable_partition(out.begin(), out.end(), [&](VertexId h) { return !p_->core.contains(h); });
  }
  return out;
}

int PartialMap::free_core_slots(VertexId h, Sign s) const {
  int c = 0;
  for (VertexId x : host().neighbors(h, s)) {
    if (!used_.contains(x) && p_->core.contains(x)) ++c;
  }
  return c;
}

void PartialMap::restore(const std::vector<VertexId>& s) {
  for (VertexId v = 0; v < t_->order(); ++v) unplace(v);
  for (VertexId v = 0; v < t_->order(); ++v) {
    if (s[v] >= 0) place(v, s[v]);
  }
}

bool PartialMap::complete(const Mask& mask) const {
  for (VertexId v = 0; v < t_->order(); ++v) {
    if (in_mask(mask, v) && img_[v] < 0) return false;
  }
  return true;
}

namespace {

bool has_placed_neighbor(const PartialMap& pm, VertexId v) {
  for (VertexId x : pm.tree().neighbors(v)) {
    if (pm.placed(x)) return true;
  }
  return false;
}

bool adjacent(const AntiTree& t, VertexId a, VertexId b) {
  const auto nb = t.neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

}  // namespace

int grow(PartialMap& pm, const Mask& mask) {
  const AntiTree& t = pm.tree();
  int total = 0;
  while (true) {
    bool any = false;
    for (int pass = 0; pass < 2 && !any; ++pass) {
      for (VertexId v = 0; v < t.order(); ++v) {
        if (pm.placed(v) || !in_mask(mask, v)) continue;
        if (pass == 0 && pm.policy().free_vertex[v]) continue;
        if (!has_placed_neighbor(pm, v)) continue;
        const auto c = pm.candidates(v);
        if (c.empty()) continue;
        pm.place(v, c.front());
        any = true;
        ++total;
      }
    }
    if (!any) break;
  }
  return total;
}

std::vector<std::pair<VertexId, VertexId>> stalls(const PartialMap& pm, const Mask& mask) {
  std::vector<std::pair<VertexId, VertexId>> out;
  const AntiTree& t = pm.tree();
  for (VertexId v = 0; v < t.order(); ++v) {
    if (pm.placed(v) || !in_mask(mask, v)) continue;
    for (VertexId w : t.neighbors(v)) {
      if (pm.placed(w) && pm.candidates(v).empty()) {
        out.emplace_back(w, v);
        break;
      }
    }
  }
  return out;
}

std::vector<VertexId> side_of(const AntiTree& t, VertexId parent, VertexId child) {
  std::vector<VertexId> out{child};
  std::vector<char> seen(t.order(), 0);
  seen[parent] = seen[child] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (VertexId x : t.neighbors(out[i])) {
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  }
  return out;
}

bool leaf_exchange(PartialMap& pm, VertexId w, VertexId w2, const Mask& mask, Trace& tr) {
  const AntiTree& t = pm.tree();
  if (!pm.placed(w) || pm.placed(w2) || !in_mask(mask, w2)) return false;
  for (VertexId h : pm.host().neighbors(pm.img(w), t.sign(w))) {
    const VertexId x = pm.owner(h);
    if (x < 0 || !t.is_leaf(x) || adjacent(t, x, w)) continue;
    const auto snap = pm.state();
    pm.unplace(x);
    if (pm.admissible(w2, h)) {
      pm.place(w2, h);
      const auto c = pm.candidates(x);
      if (!c.empty()) {
        pm.place(x, c.front());
        tr.event("leaf-exchange", "leaf " + std::to_string(x) + " moved, " + std::to_string(w2) + " -> " +
                                      std::to_string(h));
        return true;
      }
    }
    pm.restore(snap);
  }
  return false;
}

bool subtree_exchange(PartialMap& pm, VertexId w, VertexId w2, const Mask& mask, Trace& tr) {
  const AntiTree& t = pm.tree();
  if (!pm.placed(w) || pm.placed(w2) || !in_mask(mask, w2)) return false;
  const RootedAntiTree r = rooted_view(t, w);
  std::vector<std::tuple<int, VertexId, VertexId>> occ;
  for (VertexId h : pm.host().neighbors(pm.img(w), t.sign(w))) {
    const VertexId y = pm.owner(h);
    if (y < 0 || y == w || adjacent(t, y, w)) continue;
    occ.emplace_back(-r.depth[y], y, h);
  }
  std::sort(occ.begin(), occ.end());
  const int before = pm.count();
  for (const auto& [negd, y, h] : occ) {
    const auto snap = pm.state();
    for (VertexId x : side_of(t, r.parent[y], y)) pm.unplace(x);
    if (!pm.admissible(w2, h)) {
      pm.restore(snap);
      continue;
    }
    pm.place(w2, h);
    if (in_mask(mask, y)) {
      const auto c = pm.candidates(y);
      if (!c.empty()) pm.place(y, c.front());
    }
    grow(pm, mask);
    if (pm.count() > before) {
      tr.event("subtree-exchange", "occupant " + std::to_string(y) + " at distance " + std::to_string(-negd) +
                                       " gives way to " + std::to_string(w2));
      return true;
    }
    pm.restore(snap);
  }
  return false;
}

bool relocate_vertex(PartialMap& pm, VertexId root, VertexId w, const Mask& mask, Trace& tr) {
  const AntiTree& t = pm.tree();
  if (w == root || !pm.placed(w)) return false;
  const RootedAntiTree r = rooted_view(t, root);
  const VertexId p = r.parent[w];
  if (p < 0 || !pm.placed(p)) return false;
  const auto path = tree_path(t, root, p);
  const auto snap = pm.state();
  const int before = pm.count();
  const auto cut = side_of(t, p, w);
  for (VertexId x : cut) pm.unplace(x);
  auto cands = pm.candidates(w);
  const Digraph& d = pm.host();
  auto path_hits = [&](VertexId h) {
    int c = 0;
    for (VertexId x : path) {
      const VertexId hx = pm.img(x);
      if (hx >= 0 && (d.has_arc(h, hx) || d.has_arc(hx, h))) ++c;
    }
    return c;
  };
  std::vector<std::tuple<int, int, VertexId>> order;
  for (VertexId h : cands) {
    if (h == snap[w]) continue;
    order.emplace_back(path_hits(h), -pm.free_core_slots(h, t.sign(w)), h);
  }
  std::sort(order.begin(), order.end());
  const auto cleared = pm.state();
  for (const auto& [hits, slots, h] : order) {
    pm.place(w, h);
    grow(pm, mask);
    if (pm.count() > before) {
      tr.event("relocate", "vertex " + std::to_string(w) + " -> " + std::to_string(h));
      return true;
    }
    pm.restore(cleared);
  }
  pm.restore(snap);
  return false;
}

bool run_extension(PartialMap& pm, VertexId root, const Mask& mask, Trace& tr, const std::string& scope) {
  grow(pm, mask);
  while (!pm.complete(mask)) {
    const auto st = stalls(pm, mask);
    if (st.empty()) return false;
    const int before = pm.count();
    bool moved = false;
    for (const auto& [w, w2] : st) {
      if (leaf_exchange(pm, w, w2, mask, tr) || subtree_exchange(pm, w, w2, mask, tr) ||
          relocate_vertex(pm, root, w, mask, tr)) {
        moved = true;
        break;
      }
    }
    if (!moved) return false;
    grow(pm, mask);
    if (!tr.check(scope + ":progress", pm.count() > before, "placed count must rise per exchange")) return false;
  }
  return true;
}

std::optional<Embedding> bounded_net(const AntiTree& t, const Policy& p, const std::vector<VertexId>& pins,
                                     const Mask& mask, std::uint64_t budget, SearchStats* stats) {
  const bool whole = mask.empty() || std::all_of(mask.begin(), mask.end(), [](char c) { return c != 0; });
  std::vector<VertexId> verts;
  for (VertexId v = 0; v < t.order(); ++v) {
    if (in_mask(mask, v)) verts.push_back(v);
  }
  std::optional<InducedTree> sub;
  if (!whole) sub = induced_subtree(t, verts);
  const AntiTree& st = whole ? t : sub->tree;
  auto orig = [&](VertexId x) { return whole ? x : sub->to_original[x]; };

  SearchProblem prob;
  prob.host = p.arcs;
  prob.tree = &st;
  prob.node_budget = budget;
  prob.fixed.assign(st.order(), -1);
  prob.domains.assign(st.order(), std::nullopt);
  for (VertexId x = 0; x < st.order(); ++x) {
    const VertexId o = orig(x);
    if (!pins.empty() && pins[o] >= 0) prob.fixed[x] = pins[o];
    if (!p.free_vertex[o]) prob.domains[x] = p.core;
  }
  const SearchStats s = exact_search(prob);
  if (stats != nullptr) *stats = s;
  if (!s.witness) return std::nullopt;
  Embedding e;
  e.map.assign(t.order(), -1);
  for (VertexId x = 0; x < st.order(); ++x) e.map[orig(x)] = s.witness->map[x];
  return e;
}

}  // namespace antiembed::detail
