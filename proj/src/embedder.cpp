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

#include "antiembed/embedder.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "antiembed/convex.hpp"
#include "antiembed/errors.hpp"
#include "engine.hpp"
#include "json.hpp"

namespace antiembed {

using detail::Mask;
using detail::PartialMap;
using detail::Policy;

Thresholds thresholds(int k) {
  Thresholds th;
  th.k = k;
  th.s = (k + 11) / 12;
  th.quarter = k / 4;
  th.delta2_small = k / 4 + 2;
  th.half_up = (k + 1) / 2;
  th.five_twelfths_up = (5 * k + 11) / 12;
  th.seven_twelfths_up = (7 * k + 11) / 12;
  return th;
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::LowDelta: return "LowDelta";
    case Branch::MidDelta: return "MidDelta";
    case Branch::BroomA: return "BroomA";
    case Branch::BroomB_I: return "BroomB_I";
    case Branch::BroomB_II: return "BroomB_II";
    case Branch::Oracle: return "Oracle";
  }
  return "?";
}

const char* to_string(OutcomeStatus s) {
  switch (s) {
    case OutcomeStatus::Success: return "success";
    case OutcomeStatus::Refused: return "refused";
    case OutcomeStatus::Inconclusive: return "inconclusive";
    case OutcomeStatus::InternalAssertion: return "internal-assertion";
  }
  return "?";
}

void Trace::event(std::string tag, std::string detail) { events.push_back({std::move(tag), std::move(detail)}); }

bool Trace::check(std::string tag, bool ok, std::string detail) {
  checkpoints.push_back({std::move(tag), ok, std::move(detail)});
  return ok;
}

int Trace::failed() const {
  return static_cast<int>(std::count_if(checkpoints.begin(), checkpoints.end(), [](const Checkpoint& c) { return !c.ok; }));
}

void Trace::append(const Trace& other) {
  events.insert(events.end(), other.events.begin(), other.events.end());
  checkpoints.insert(checkpoints.end(), other.checkpoints.begin(), other.checkpoints.end());
}

int EmbedOutcome::exit_code() const {
  switch (status) {
    case OutcomeStatus::Success: return 0;
    case OutcomeStatus::Refused: return 2;
    case OutcomeStatus::Inconclusive: return 3;
    case OutcomeStatus::InternalAssertion: return 4;
  }
  return 4;
}

bool respects_mask(const AntiTree& t, const Embedding& e, const Digraph& core) {
  if (static_cast<int>(e.map.size()) != t.order()) return false;
  for (VertexId x = 0; x < t.order(); ++x) {
    if (t.is_leaf(x)) continue;
    const VertexId h = e.map[x];
    if (h < 0 || h >= core.order() || core.out_degree(h) + core.in_degree(h) == 0) return false;
  }
  return true;
}

namespace {

std::string str(long v) { return std::to_string(v); }

int semidegree(const Digraph& g) { return std::min(pseudo_degree(g, Sign::Plus), pseudo_degree(g, Sign::Minus)); }

Mask mask_of(int n, const std::vector<VertexId>& vs) {
  Mask m(n, 0);
  for (VertexId v : vs) m[v] = 1;
  return m;
}

std::vector<VertexId> pins_of(const AntiTree& t, std::initializer_list<std::pair<VertexId, VertexId>> fixed) {
  std::vector<VertexId> p(t.order(), -1);
  for (const auto& [x, h] : fixed) p[x] = h;
  return p;
}

int radius_from(const AntiTree& t, VertexId u) {
  const auto dist = tree_distances(t, u);
  return *std::max_element(dist.begin(), dist.end());
}

// State shared by the procedures of one run.
struct Ctx {
  const EmbedOptions& opt;
  Trace& tr;
  bool used_net = false;
};

// Hands whatever the constructive moves left unplaced to the bounded search.
Embedding close_with_net(const PartialMap& pm, const std::vector<VertexId>& pins, const Mask& mask, Ctx& c,
                         const std::string& scope) {
  if (pm.complete(mask)) return pm.embedding();
  c.tr.event(scope + "-net", "placed " + str(pm.count()) + " of " + str(pm.tree().order()));
  SearchStats st;
  auto e = detail::bounded_net(pm.tree(), pm.policy(), pins, mask, c.opt.net_budget, &st);
  if (!e) {
    throw InternalAssertion(scope + "-net", std::string("bounded search ended ") + to_string(st.verdict) + " after " +
                                                str(static_cast<long>(st.nodes_expanded)) + " nodes");
  }
  c.used_net = true;
  return *e;
}

// Unplaced vertex count restricted to a mask.
int missing(const PartialMap& pm, const Mask& mask) {
  int m = 0;
  for (VertexId v = 0; v < pm.tree().order(); ++v) {
    if (detail::in_mask(mask, v) && !pm.placed(v)) ++m;
  }
  return m;
}

// ---- maximum degree at most floor(k/4) -------------------------------------

// Moves z (and what hangs below it, seen from w) to a fresh vertex b next to
// the image of its parent, chosen so that b has room for all children of z.
bool rebase_deepest(PartialMap& pm, const RootedAntiTree& rt, VertexId w, Ctx& c) {
  const AntiTree& t = pm.tree();
  int last_depth = 0;
  bool progress = false;
  for (int iter = 0; iter < t.order() && !pm.complete({}); ++iter) {
    VertexId z = -1;
    for (VertexId v = 0; v < t.order(); ++v) {
      if (!pm.placed(v) || v == w) continue;
      bool open = false;
      for (VertexId x : t.neighbors(v)) open = open || !pm.placed(x);
      if (open && (z < 0 || rt.depth[v] > rt.depth[z])) z = v;
    }
    if (z < 0) break;
    if (!c.tr.check("low-delta-dist", rt.depth[z] > last_depth,
                    "dist(w,z) = " + str(rt.depth[z]) + " after " + str(last_depth))) {
      break;
    }
    last_depth = rt.depth[z];
    const VertexId pz = rt.parent[z];
    if (!c.tr.check("low-delta-pz", pz != w, "z = " + str(z))) break;
    const Sign sz = t.sign(z);
    const Sign sp = t.sign(pz);
    const auto snap = pm.state();
    const int before = pm.count();
    for (VertexId x : detail::side_of(t, pz, z)) pm.unplace(x);
    const int kids = static_cast<int>(rt.children[z].size());
    VertexId b = -1;
    for (VertexId h : pm.host().neighbors(pm.img(pz), sp)) {
      if (h == snap[z] || !pm.admissible(z, h)) continue;
      int room = 0;
      for (VertexId x : pm.host().neighbors(h, sz)) {
        if (!pm.image().contains(x)) ++room;
      }
      if (room >= kids) {
        b = h;
        break;
      }
    }
    if (b < 0) {
      pm.restore(snap);
      break;
    }
    pm.place(z, b);
    detail::grow(pm, {});
    if (pm.count() <= before) {
      pm.restore(snap);
      break;
    }
    c.tr.event("low-delta-rebase", "vertex " + str(z) + " -> " + str(b));
    progress = true;
  }
  return progress;
}

Embedding low_delta_impl(const Digraph& dc, const AntiTree& t, Ctx& c) {
  const Thresholds th = thresholds(t.k());
  const Policy pol = detail::make_policy(dc, dc, t);
  PartialMap pm(t, pol);
  const auto start = pm.candidates(0);
  if (start.empty()) throw InternalAssertion("low-delta-start", "no host vertex carries the first tree vertex");
  pm.place(0, start.front());
  detail::grow(pm, {});
  c.tr.check("low-delta-greedy", pm.count() >= std::min(t.order(), th.half_up + 1),
             "greedy placed " + str(pm.count()));

  for (int round = 0; round < t.order() && !pm.complete({}); ++round) {
    const auto st = detail::stalls(pm, {});
    if (st.empty()) break;
    const auto [w, w2] = st.front();
    const Sign sg = t.sign(w);
    const RootedAntiTree rt = rooted_view(t, w);
    std::vector<VertexId> ys;
    for (VertexId h : dc.neighbors(pm.img(w), sg)) {
      const VertexId y = pm.owner(h);
      if (y >= 0 && rt.depth[y] >= 2) ys.push_back(y);
    }
    c.tr.check("k4-neighbors", static_cast<int>(ys.size()) >= th.quarter,
               "|Y| = " + str(static_cast<long>(ys.size())));
    std::sort(ys.begin(), ys.end(), [&](VertexId a, VertexId b) {
      return rt.depth[a] != rt.depth[b] ? rt.depth[a] > rt.depth[b] : a < b;
    });
    const int before = pm.count();
    bool moved = false;
    for (VertexId y : ys) {
      const auto snap = pm.state();
      const VertexId hy = pm.img(y);
      for (VertexId x : detail::side_of(t, rt.parent[y], y)) pm.unplace(x);
      if (!pm.admissible(w2, hy)) {
        pm.restore(snap);
        continue;
      }
      pm.place(w2, hy);
      const auto cy = pm.candidates(y);
      if (!cy.empty()) {
        pm.place(y, cy.front());
      } else if (rt.depth[y] == 2) {
        pm.restore(snap);
        continue;
      }
      detail::grow(pm, {});
      if (pm.count() > before) {
        c.tr.event("low-delta-exchange", "w = " + str(w) + ", y = " + str(y) + " at distance " + str(rt.depth[y]));
        moved = true;
        break;
      }
      pm.restore(snap);
    }
    if (!moved) moved = rebase_deepest(pm, rt, w, c);
    if (!moved) break;
  }
  if (!pm.complete({})) detail::run_extension(pm, 0, {}, c.tr, "low-delta");
  return close_with_net(pm, pins_of(t, {}), {}, c, "low-delta");
}

// ---- the star layer around u -----------------------------------------------

Policy star_policy(const Digraph& d, const Digraph& dc, const AntiTree& t, VertexId u) {
  Policy pol = detail::make_policy(d, dc, t);
  for (VertexId x : t.neighbors(u)) {
    if (t.is_leaf(x)) pol.free_vertex[x] = 1;
  }
  return pol;
}

// Relocates a distance-two vertex y off a neighbour slot of f(w) so that the
// stalled w2 can take it.
bool distance_two_exchange(PartialMap& pm, const RootedAntiTree& rt, VertexId w, VertexId w2, const Mask& mask,
                           Trace& tr) {
  const AntiTree& t = pm.tree();
  if (!detail::in_mask(mask, w2)) return false;
  for (VertexId h : pm.host().neighbors(pm.img(w), t.sign(w))) {
    const VertexId y = pm.owner(h);
    if (y < 0 || rt.depth[y] != 2 || rt.parent[y] == w || !t.is_leaf(y)) continue;
    const auto snap = pm.state();
    pm.unplace(y);
    if (!pm.admissible(w2, h)) {
      pm.restore(snap);
      continue;
    }
    pm.place(w2, h);
    const auto cy = pm.candidates(y);
    if (!cy.empty()) {
      pm.place(y, cy.front());
      tr.event("pu-exchange", "y = " + str(y) + " moved under " + str(rt.parent[y]) + ", w' = " + str(w2));
      return true;
    }
    pm.restore(snap);
  }
  return false;
}

void place_star_layer(PartialMap& pm, const RootedAntiTree& rt, VertexId u, VertexId anchor, const Mask& mask,
                      Ctx& c) {
  const AntiTree& t = pm.tree();
  c.tr.check("pu-anchor-degree", pm.host().out_degree(anchor) >= t.degree(u),
             "deg+(a) = " + str(pm.host().out_degree(anchor)));
  c.tr.check("pu-anchor-core", pm.policy().core.contains(anchor), "anchor " + str(anchor));
  pm.place(u, anchor);
  for (int pass = 0; pass < 2; ++pass) {
    for (VertexId x : t.neighbors(u)) {
      if (t.is_leaf(x) != (pass == 1) || !detail::in_mask(mask, x)) continue;
      const auto cand = pm.candidates(x);
      if (!cand.empty()) pm.place(x, cand.front());
    }
  }
  detail::grow(pm, mask);
  while (!pm.complete(mask)) {
    const auto st = detail::stalls(pm, mask);
    if (st.empty()) break;
    bool moved = false;
    for (const auto& [w, w2] : st) {
      if (detail::leaf_exchange(pm, w, w2, mask, c.tr) || distance_two_exchange(pm, rt, w, w2, mask, c.tr)) {
        moved = true;
        break;
      }
    }
    if (!moved) {
      c.tr.check("pu-stall", false, "no exchange frees a slot for " + str(st.front().second));
      break;
    }
    detail::grow(pm, mask);
  }
  if (!pm.complete(mask)) detail::run_extension(pm, u, mask, c.tr, "pu");
}

Embedding radius_two_impl(const Digraph& d, const Digraph& dc, const AntiTree& t, VertexId u, VertexId anchor,
                          Ctx& c) {
  const Policy pol = star_policy(d, dc, t, u);
  PartialMap pm(t, pol);
  const RootedAntiTree rt = rooted_view(t, u);
  place_star_layer(pm, rt, u, anchor, {}, c);
  return close_with_net(pm, pins_of(t, {{u, anchor}}), {}, c, "pu");
}

Embedding wide_star_impl(const Digraph& d, const Digraph& dc, const AntiTree& t, VertexId u, VertexId anchor,
                         Ctx& c) {
  const RootedAntiTree rt = rooted_view(t, u);
  if (*std::max_element(rt.depth.begin(), rt.depth.end()) <= 2) {
    c.tr.event("wide-star-radius-two");
    return radius_two_impl(d, dc, t, u, anchor, c);
  }
  const int delta = t.degree(u);
  const Policy pol = star_policy(d, dc, t, u);
  PartialMap pm(t, pol);
  Mask layer(t.order(), 0);
  for (VertexId v = 0; v < t.order(); ++v) layer[v] = rt.depth[v] <= 2;
  place_star_layer(pm, rt, u, anchor, layer, c);
  c.tr.event("wide-star-layer", "T1 placed " + str(pm.count()) + " vertices");
  detail::grow(pm, {});
  while (!pm.complete({})) {
    const auto st = detail::stalls(pm, {});
    if (st.empty()) break;
    const auto [w, w2] = st.front();
    const VertexId pw = rt.parent[w];
    c.tr.check("wide-star-parent", pw != u && pw >= 0, "w = " + str(w));
    c.tr.check("a-out", pm.image().and_count(pm.host().out_set(anchor)) >= delta, "anchor " + str(anchor));
    int b_size = 0;
    if (pw >= 0) {
      for (VertexId h : pm.host().neighbors(pm.img(pw), t.sign(pw))) {
        if (pm.allowed(w, h)) ++b_size;
      }
    }
    c.tr.check("b-nonempty", b_size >= 1, "|B| = " + str(b_size));
    c.tr.check("b-pair", b_size >= 2, "|B| = " + str(b_size));
    if (!(detail::relocate_vertex(pm, u, w, {}, c.tr) || detail::subtree_exchange(pm, w, w2, {}, c.tr) ||
          detail::leaf_exchange(pm, w, w2, {}, c.tr))) {
      break;
    }
    detail::grow(pm, {});
  }
  if (!pm.complete({})) detail::run_extension(pm, u, {}, c.tr, "wide-star");
  return close_with_net(pm, pins_of(t, {{u, anchor}}), {}, c, "wide-star");
}

// ---- large maximum degree, small second degree ------------------------------

Embedding lift(const InducedTree& it, const Embedding& sub, int n) {
  Embedding e;
  e.map.assign(n, -1);
  for (VertexId x = 0; x < it.tree.order(); ++x) e.map[it.to_original[x]] = sub.map[x];
  return e;
}

Embedding mid_delta_impl(const Digraph& d, const AntiTree& t, Ctx& c, CaseTag& tag) {
  const Thresholds th = thresholds(t.k());
  const DegreeStats ds = degree_stats(t);
  const VertexId u = ds.argmax_u;
  const int k = t.k();
  const int r = std::min(th.half_up, k - ds.delta + 1);
  tag.r = r;
  const SelectionResult sel = select_subdigraph(d, k, r);
  const Digraph& dp = sel.sub;
  c.tr.event("selection", std::string("case ") + to_string(sel.tag) + ", r = " + str(r));

  const bool strip = sel.tag == SelectionCase::I && r < th.half_up;
  std::vector<VertexId> anchors;
  for (VertexId a = 0; a < d.order(); ++a) {
    if (sel.tag == SelectionCase::II ? (dp.out_degree(a) > 0 && d.out_degree(a) >= ds.delta) : dp.out_degree(a) >= k) {
      anchors.push_back(a);
    }
  }
  if (sel.tag == SelectionCase::I && sel.witness_vertex >= 0) {
    std::stable_partition(anchors.begin(), anchors.end(), [&](VertexId a) { return a == sel.witness_vertex; });
  }
  if (!c.tr.check("mid-anchor", !anchors.empty(), "no anchor of sufficient out-degree")) {
    throw InternalAssertion("mid-anchor", "no anchor vertex");
  }
  tag.detail = std::string(sel.tag == SelectionCase::I ? "I" : "II") + (strip ? "-strip" : "");

  std::vector<VertexId> stripped;
  std::optional<InducedTree> core_tree;
  if (strip) {
    const int count = ds.delta - r;
    const auto& leaves = ds.leaves_of[u];
    if (!c.tr.check("strip-leaves", static_cast<int>(leaves.size()) >= count + 1,
                    "u has " + str(static_cast<long>(leaves.size())) + " leaves, strip " + str(count))) {
      throw InternalAssertion("strip-leaves", "too few leaves at u");
    }
    stripped.assign(leaves.end() - count, leaves.end());
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < t.order(); ++v) {
      if (std::find(stripped.begin(), stripped.end(), v) == stripped.end()) keep.push_back(v);
    }
    core_tree = induced_subtree(t, keep);
    c.tr.event("strip", "removed " + str(count) + " leaves of u, T* has " + str(core_tree->tree.k()) + " arcs");
  }

  std::string last;
  const int tries = std::min<int>(static_cast<int>(anchors.size()), std::max(1, c.opt.backtrack_depth + 1));
  for (int i = 0; i < tries; ++i) {
    const VertexId a = anchors[i];
    Trace local;
    Ctx sub{c.opt, local};
    try {
      Embedding e;
      if (!strip) {
        e = wide_star_impl(d, dp, t, u, a, sub);
      } else {
        const Embedding es =
            wide_star_impl(d, dp, core_tree->tree, core_tree->from_original[u], a, sub);
        e = lift(*core_tree, es, t.order());
        VertexSet used(d.order());
        for (VertexId h : e.map) {
          if (h >= 0) used.insert(h);
        }
        std::size_t next = 0;
        for (VertexId h : dp.out_neighbors(a)) {
          if (next == stripped.size()) break;
          if (!used.contains(h)) e.map[stripped[next++]] = h;
        }
        if (!sub.tr.check("reattach", next == stripped.size(), "reattached " + str(static_cast<long>(next)))) {
          throw InternalAssertion("reattach", "anchor lacks free out-neighbours");
        }
        sub.tr.event("reattach", str(static_cast<long>(stripped.size())) + " leaves at " + str(a));
      }
      c.tr.append(local);
      c.used_net = c.used_net || sub.used_net;
      return e;
    } catch (const InternalAssertion& ex) {
      c.tr.append(local);
      c.tr.event("backtrack", "anchor " + str(a) + ": " + ex.what());
      last = ex.tag;
    }
  }
  throw InternalAssertion(last.empty() ? "mid-anchor" : last, "every anchor candidate failed");
}

// ---- second degree at least floor(k/4)+3 ------------------------------------

bool is_double_star(const DoubleBroom& b) { return b.path_uv.size() == 2; }

std::vector<VertexId> candidate_anchors(const Digraph& d, const Digraph& dp, Sign side, int min_host_degree,
                                        VertexId preferred) {
  std::vector<VertexId> out;
  for (VertexId a = 0; a < d.order(); ++a) {
    if (dp.degree(a, side) > 0 && d.degree(a, side) >= min_host_degree) out.push_back(a);
  }
  if (preferred >= 0) {
    std::stable_partition(out.begin(), out.end(), [&](VertexId a) { return a == preferred; });
  }
  return out;
}

Embedding broom_caterpillar(const Digraph& dp, const AntiTree& t, const DoubleBroom& b, int pad, VertexId v,
                            Trace& tr, const std::string& scope) {
  const InducedTree it = induced_subtree(t, b.vertices);
  const int m = it.tree.order();
  AntiTree shape = it.tree;
  if (pad > 0) {
    std::vector<Arc> arcs = it.tree.digraph().arcs();
    const VertexId vv = it.from_original[v];
    for (int i = 0; i < pad; ++i) arcs.push_back({m + i, vv});
    shape = validate_antitree(Digraph(m + pad, arcs));
    tr.check("padded-size", shape.order() <= t.k() + 1, "|B'| = " + str(shape.order()));
    tr.check("padded-balance", shape.plus_vertices().size() == shape.minus_vertices().size(),
             "|B'+| = " + str(static_cast<long>(shape.plus_vertices().size())));
  }
  Embedding e;
  try {
    e = embed_caterpillar_mindeg(dp, shape);
  } catch (const HypothesisViolated& ex) {
    throw InternalAssertion(scope + "-mindeg", ex.what());
  }
  Embedding out;
  out.map.assign(t.order(), -1);
  for (VertexId x = 0; x < m; ++x) out.map[it.to_original[x]] = e.map[x];
  tr.event(scope + "-caterpillar", "broom of " + str(m) + " vertices" + (pad > 0 ? ", padded by " + str(pad) : ""));
  return out;
}

struct BroomPolicy {
  const Digraph* arcs;
  Policy pol;
};

BroomPolicy broom_policy(const Digraph& d, const BroomPlan& plan, const AntiTree& t) {
  const Digraph& dp = plan.selection.sub;
  if (plan.tag.branch == Branch::BroomB_II) {
    Policy pol = detail::make_policy(d, dp, t);
    for (VertexId x = 0; x < t.order(); ++x) pol.free_vertex[x] = t.is_leaf(x) ? 1 : 0;
    return {&d, pol};
  }
  return {&dp, detail::make_policy(dp, dp, t)};
}

// Places the given roots, then grows and exchanges inside the broom.
bool grow_broom(PartialMap& pm, VertexId root, const Mask& mask, Ctx& c, const std::string& scope) {
  detail::grow(pm, mask);
  return pm.complete(mask) || detail::run_extension(pm, root, mask, c.tr, scope);
}

Embedding broom_greedy(const Digraph& d, const BroomPlan& plan, const AntiTree& t, Ctx& c) {
  const Thresholds th = thresholds(t.k());
  const Digraph& dp = plan.selection.sub;
  const Mask mask = mask_of(t.order(), plan.broom.vertices);
  const BroomPolicy bp = broom_policy(d, plan, t);
  const VertexId u = plan.u;
  const VertexId v = plan.v;
  const int delta = t.degree(u);
  const int delta2 = t.degree(v);
  const int k = t.k();

  struct Start {
    std::vector<std::pair<VertexId, VertexId>> fixed;
    VertexId root;
  };
  std::vector<Start> starts;
  std::string scope;
  VertexId y = -1;
  if (plan.tag.branch == Branch::BroomA) {
    scope = "broom-a";
    for (VertexId a : candidate_anchors(d, dp, Sign::Plus, 1, -1)) starts.push_back({{{u, a}}, u});
  } else if (k - delta < th.five_twelfths_up) {
    scope = "broom-b2-high";
    for (VertexId a : candidate_anchors(d, dp, Sign::Plus, delta, -1)) starts.push_back({{{u, a}}, u});
  } else if (is_double_star(plan.broom)) {
    scope = "broom-b2-double-star";
    const VertexId b = plan.selection.witness_vertex;
    for (VertexId a : dp.in_neighbors(b)) {
      if (d.out_degree(a) >= delta) starts.push_back({{{u, a}, {v, b}}, u});
    }
  } else {
    const auto ds = degree_stats(t);
    VertexId x = u;
    std::string rule;
    if (12 * (delta - delta2) >= k) {
      rule = "(i)";
      x = u;
      y = v;
    } else if (t.sign(v) == Sign::Plus) {
      rule = "(ii)";
      y = 12 * static_cast<int>(ds.leaves_of[v].size()) >= k ? v : u;
      x = y == v ? u : v;
      c.tr.check("case-ii-leaves", 12 * static_cast<int>(ds.leaves_of[y].size()) >= k, "y = " + str(y));
    } else {
      rule = "(iii)";
      x = v;
      y = u;
    }
    scope = "broom-b2" + rule;
    c.tr.event("relabel", rule + " x = " + str(x) + ", y = " + str(y));
    if (t.sign(x) == Sign::Plus) {
      for (VertexId a : candidate_anchors(d, dp, Sign::Plus, th.seven_twelfths_up, -1)) starts.push_back({{{x, a}}, x});
    } else {
      starts.push_back({{{x, plan.selection.witness_vertex}}, x});
      for (VertexId b : candidate_anchors(d, dp, Sign::Minus, k, -1)) {
        if (b != plan.selection.witness_vertex && dp.in_degree(b) >= k) starts.push_back({{{x, b}}, x});
      }
    }
  }
  if (!c.tr.check(scope + "-anchor", !starts.empty(), "no anchor vertex qualifies")) {
    throw InternalAssertion(scope + "-anchor", "no anchor vertex");
  }
  const int tries = std::min<int>(static_cast<int>(starts.size()), std::max(1, c.opt.backtrack_depth + 1));
  for (int i = 0; i < tries; ++i) {
    PartialMap pm(t, bp.pol);
    bool ok = true;
    for (const auto& [tv, h] : starts[i].fixed) {
      if (pm.owner(h) >= 0 || !pm.consistent(tv, h)) ok = false;
      if (ok) pm.place(tv, h);
    }
    if (!ok) continue;
    c.tr.event(scope + "-start", "root " + str(starts[i].root) + " -> " + str(pm.img(starts[i].root)));
    detail::grow(pm, mask);
    if (y >= 0) {
      c.tr.check("claim-maximum", 4 * pm.count() > 3 * k || pm.complete(mask), "|T'| = " + str(pm.count()));
      c.tr.check("claim-y-placed", pm.placed(y), "y = " + str(y));
    }
    if (grow_broom(pm, starts[i].root, mask, c, scope)) return pm.embedding();
    c.tr.event("backtrack", scope + " start " + str(i) + " left " + str(missing(pm, mask)) + " broom vertices");
  }
  PartialMap pm(t, bp.pol);
  return close_with_net(pm, pins_of(t, {}), mask, c, scope);
}

Embedding double_broom_impl(const Digraph& d, const BroomPlan& plan, const AntiTree& t, Ctx& c) {
  const Digraph& dp = plan.selection.sub;
  switch (plan.tag.branch) {
    case Branch::BroomA:
      if (plan.subcase_padded) {
        return broom_caterpillar(dp, t, plan.broom, t.degree(plan.u) - t.degree(plan.v), plan.v, c.tr, "broom-a");
      }
      return broom_greedy(d, plan, t, c);
    case Branch::BroomB_I: {
      int bp = 0;
      int bm = 0;
      for (VertexId x : plan.broom.vertices) (t.sign(x) == Sign::Plus ? bp : bm)++;
      c.tr.check("broom-b1-tree-balance", bp <= bm, "|B+| = " + str(bp) + ", |B-| = " + str(bm));
      const auto [dplus, dminus] = plus_minus_sets(dp);
      c.tr.check("broom-b1-host-balance", dplus.size() <= dminus.size(),
                 "|D'+| = " + str(static_cast<long>(dplus.size())));
      return broom_caterpillar(dp, t, plan.broom, 0, plan.v, c.tr, "broom-b1");
    }
    case Branch::BroomB_II:
      return broom_greedy(d, plan, t, c);
    default:
      throw InvalidInput("double broom plan carries a non-broom branch");
  }
}

Embedding extend_impl(const Digraph& d, const BroomPlan& plan, const AntiTree& t, const Embedding& partial, Ctx& c) {
  const Thresholds th = thresholds(t.k());
  const int k = t.k();
  const BroomPolicy bp = broom_policy(d, plan, t);
  const VertexId u = plan.u;
  std::vector<VertexId> pins = partial.map;
  pins.resize(t.order(), -1);

  if (std::all_of(pins.begin(), pins.end(), [](VertexId h) { return h >= 0; })) {
    c.tr.event("extend-identity", "the broom is the whole tree");
    return partial;
  }

  if (plan.tag.branch == Branch::BroomB_I && t.degree(u) >= th.seven_twelfths_up) {
    // Embed T minus the leaves of u first, then hang those leaves at f(u).
    const DegreeStats ds = degree_stats(t);
    Mask star(t.order(), 1);
    for (VertexId x : ds.leaves_of[u]) star[x] = 0;
    const int tstar = t.order() - static_cast<int>(ds.leaves_of[u].size());
    c.tr.check("b1-tstar-size", 6 * tstar <= 6 * plan.tag.r + k, "|T*| = " + str(tstar));
    const VertexId a = plan.selection.witness_vertex;
    PartialMap pm(t, bp.pol);
    pm.place(u, a);
    c.tr.event("b1-reembed", "u -> " + str(a));
    if (!grow_broom(pm, u, star, c, "b1-tstar")) {
      return close_with_net(pm, pins_of(t, {{u, a}}), {}, c, "b1-tstar");
    }
    detail::grow(pm, {});
    return close_with_net(pm, pins_of(t, {{u, a}}), {}, c, "b1-leaves");
  }

  PartialMap pm(t, bp.pol);
  for (VertexId x = 0; x < t.order(); ++x) {
    if (pins[x] >= 0) pm.place(x, pins[x]);
  }
  const std::string scope = plan.tag.branch == Branch::BroomB_I ? "b1-extend" : "outside-caterpillar";
  detail::grow(pm, {});
  if (!pm.complete({}) && plan.tag.branch == Branch::BroomB_I) {
    const auto st = detail::stalls(pm, {});
    if (!st.empty()) {
      const auto [w, w2] = st.front();
      c.tr.check("b1-k13", k >= 13, "stall at " + str(w) + " with k = " + str(k));
      c.tr.event("b1-stall", "w = " + str(w) + ", w' = " + str(w2));
    }
  }
  if (pm.complete({}) || detail::run_extension(pm, u, {}, c.tr, scope)) return pm.embedding();
  try {
    return close_with_net(pm, pins, {}, c, scope + "-pinned");
  } catch (const InternalAssertion&) {
    PartialMap fresh(t, bp.pol);
    return close_with_net(fresh, pins_of(t, {}), {}, c, scope);
  }
}

// ---- outcome plumbing -------------------------------------------------------

template <class Body>
EmbedOutcome guarded(const Digraph& host, const AntiTree& t, const EmbedOptions& opt, CaseTag tag, Body&& body) {
  EmbedOutcome o;
  o.tag = std::move(tag);
  Ctx c{opt, o.trace};
  try {
    Embedding e = body(c, *o.tag);
    const auto chk = check_embedding(t.digraph(), host, e);
    if (!chk.ok) throw InternalAssertion("final-validation", chk.reason);
    o.status = OutcomeStatus::Success;
    o.embedding = std::move(e);
    o.used_net = c.used_net;
  } catch (const InternalAssertion& ex) {
    o.status = opt.check_hypotheses ? OutcomeStatus::InternalAssertion : OutcomeStatus::Inconclusive;
    o.message = ex.what();
  } catch (const Error& ex) {
    o.status = opt.check_hypotheses ? OutcomeStatus::InternalAssertion : OutcomeStatus::Inconclusive;
    o.message = std::string("unexpected error: ") + ex.what();
  }
  return o;
}

EmbedOutcome refused(std::string reason, std::optional<ForbiddenWitness> w = std::nullopt) {
  EmbedOutcome o;
  o.status = OutcomeStatus::Refused;
  o.trace.event("refused", reason);
  o.failure = HypothesisReport{std::move(reason), std::move(w)};
  return o;
}

CaseTag base_tag(Branch b, const AntiTree& t) {
  const DegreeStats ds = degree_stats(t);
  CaseTag tag;
  tag.branch = b;
  tag.k = t.k();
  tag.s = thresholds(t.k()).s;
  tag.delta = ds.delta;
  tag.delta2 = ds.delta2;
  return tag;
}

std::optional<std::string> density_problem(const Digraph& d, int k) {
  const long bound = static_cast<long>(k - 1) * d.order();
  if (d.size() > bound) return std::nullopt;
  return "density: a(D) = " + str(d.size()) + " is not above (k-1)n = " + str(bound);
}

std::optional<EmbedOutcome> freeness_refusal(const Digraph& d, int k) {
  const int s = thresholds(k).s;
  if (auto w = find_k2s(d, s)) return refused("host contains K_{2," + str(s) + "}", std::move(w));
  return std::nullopt;
}

// Runs f on the reversed instance when u is an in-vertex and returns its map,
// which is valid for the original instance as well.
template <class F>
EmbedOutcome with_out_vertex_u(const Digraph& d, const AntiTree& t, F&& f) {
  const DegreeStats ds = degree_stats(t);
  if (t.sign(ds.argmax_u) == Sign::Plus) return f(d, t);
  EmbedOutcome o = f(reverse(d), reverse_tree(t));
  o.trace.events.insert(o.trace.events.begin(), TraceEvent{"normalize", "reversed host and tree"});
  return o;
}

std::optional<std::string> star_preconditions(const Digraph& d, const Digraph& dc, const AntiTree& t, VertexId anchor) {
  const Thresholds th = thresholds(t.k());
  const DegreeStats ds = degree_stats(t);
  if (ds.delta2 > th.delta2_small) return "second degree above floor(k/4)+2";
  if (ds.delta <= th.quarter) return "maximum degree not above floor(k/4)";
  if (t.sign(ds.argmax_u) != Sign::Plus) return "maximum-degree vertex is an in-vertex";
  if (dc.order() != d.order()) return "core digraph must share the host's vertex ids";
  if (dc.size() == 0 || semidegree(dc) < th.half_up) return "core minimum pseudo-semidegree below ceil(k/2)";
  if (anchor < 0 || anchor >= d.order() || d.out_degree(anchor) < ds.delta) return "anchor out-degree below Delta";
  return std::nullopt;
}

EmbedOutcome normalized_pipeline(const Digraph& d, const AntiTree& t, const EmbedOptions& opt) {
  const Thresholds th = thresholds(t.k());
  const DegreeStats ds = degree_stats(t);
  EmbedOutcome o;
  if (ds.delta2 <= th.delta2_small) {
    if (ds.delta <= th.quarter) {
      o = guarded(d, t, opt, base_tag(Branch::LowDelta, t), [&](Ctx& c, CaseTag& tag) {
        const Digraph core = prune_pseudo(d, t.k());
        tag.detail = "pruned to " + str(core.size()) + " arcs";
        return low_delta_impl(core, t, c);
      });
    } else {
      o = guarded(d, t, opt, base_tag(Branch::MidDelta, t),
                  [&](Ctx& c, CaseTag& tag) { return mid_delta_impl(d, t, c, tag); });
    }
  } else {
    o = embed_big_delta2(d, t, EmbedOptions{opt.check_hypotheses, false, false, opt.net_budget, opt.fallback_budget,
                                            opt.backtrack_depth});
    if (o.status == OutcomeStatus::Refused && !opt.check_hypotheses) o.status = OutcomeStatus::Inconclusive;
  }
  if (o.status != OutcomeStatus::Success && o.status != OutcomeStatus::Refused && opt.oracle_fallback) {
    const EmbedOutcome fb = oracle_fallback(d, t, opt.fallback_budget);
    o.fallback = fb.fallback;
    o.trace.event("oracle-fallback", fb.fallback ? to_string(fb.fallback->verdict) : "none");
  }
  return o;
}

}  // namespace

EmbedOutcome embed_antitree(const Digraph& d, const AntiTree& t, const EmbedOptions& opt) {
  const int k = t.k();
  if (opt.check_hypotheses) {
    std::optional<EmbedOutcome> bad;
    if (auto why = density_problem(d, k)) {
      bad = refused(*why);
    } else {
      bad = freeness_refusal(d, k);
    }
    if (bad) {
      if (!opt.force_oracle) return *bad;
      EmbedOutcome o = oracle_fallback(d, t, opt.fallback_budget);
      o.trace.events.insert(o.trace.events.begin(), TraceEvent{"hypotheses-failed", bad->failure->reason});
      return o;
    }
  }
  return with_out_vertex_u(d, t, [&](const Digraph& dd, const AntiTree& tt) { return normalized_pipeline(dd, tt, opt); });
}

EmbedOutcome embed_low_delta(const Digraph& d_core, const AntiTree& t, const EmbedOptions& opt) {
  const Thresholds th = thresholds(t.k());
  if (opt.check_hypotheses) {
    const DegreeStats ds = degree_stats(t);
    if (ds.delta > th.quarter) return refused("maximum degree above floor(k/4)");
    if (d_core.size() == 0 || semidegree(d_core) < th.half_up) {
      return refused("core minimum pseudo-semidegree below ceil(k/2)");
    }
    if (auto bad = freeness_refusal(d_core, t.k())) return *bad;
  }
  return guarded(d_core, t, opt, base_tag(Branch::LowDelta, t),
                 [&](Ctx& c, CaseTag&) { return low_delta_impl(d_core, t, c); });
}

EmbedOutcome embed_mid_delta(const Digraph& d, const AntiTree& t, const EmbedOptions& opt) {
  return with_out_vertex_u(d, t, [&](const Digraph& dd, const AntiTree& tt) {
    const Thresholds th = thresholds(tt.k());
    if (opt.check_hypotheses) {
      const DegreeStats ds = degree_stats(tt);
      if (ds.delta <= th.quarter) return refused("maximum degree not above floor(k/4)");
      if (ds.delta2 > th.delta2_small) return refused("second degree above floor(k/4)+2");
      if (auto why = density_problem(dd, tt.k())) return refused(*why);
      if (auto bad = freeness_refusal(dd, tt.k())) return *bad;
    }
    return guarded(dd, tt, opt, base_tag(Branch::MidDelta, tt),
                   [&](Ctx& c, CaseTag& tag) { return mid_delta_impl(dd, tt, c, tag); });
  });
}

EmbedOutcome embed_wide_star(const Digraph& d, const Digraph& d_core, const AntiTree& t, VertexId anchor,
                             const EmbedOptions& opt) {
  if (opt.check_hypotheses) {
    if (auto why = star_preconditions(d, d_core, t, anchor)) return refused(*why);
    if (auto bad = freeness_refusal(d, t.k())) return *bad;
  }
  const VertexId u = degree_stats(t).argmax_u;
  CaseTag tag = base_tag(Branch::MidDelta, t);
  tag.detail = "wide-star";
  return guarded(d, t, opt, tag, [&](Ctx& c, CaseTag&) { return wide_star_impl(d, d_core, t, u, anchor, c); });
}

EmbedOutcome embed_radius_two(const Digraph& d, const Digraph& d_core, const AntiTree& t, VertexId anchor,
                              const EmbedOptions& opt) {
  const VertexId u = degree_stats(t).argmax_u;
  if (opt.check_hypotheses) {
    if (auto why = star_preconditions(d, d_core, t, anchor)) return refused(*why);
    if (radius_from(t, u) > 2) return refused("some vertex lies farther than two from u");
    if (auto bad = freeness_refusal(d, t.k())) return *bad;
  }
  CaseTag tag = base_tag(Branch::MidDelta, t);
  tag.detail = "radius-two";
  return guarded(d, t, opt, tag, [&](Ctx& c, CaseTag&) { return radius_two_impl(d, d_core, t, u, anchor, c); });
}

BroomPlan plan_double_broom(const Digraph& d, const AntiTree& t) {
  const Thresholds th = thresholds(t.k());
  const DegreeStats ds = degree_stats(t);
  const int k = t.k();
  BroomPlan plan;
  plan.u = ds.argmax_u;
  plan.v = ds.argmax2_v;
  plan.broom = double_broom(t, plan.u, plan.v);
  const int nb = static_cast<int>(plan.broom.vertices.size());
  const int delta = ds.delta;
  const int delta2 = ds.delta2;
  const bool small = 4 * nb <= 3 * k;
  const bool padded = t.sign(plan.v) == Sign::Minus && 12 * (delta + delta2) < 7 * k && nb <= k + 1 - (delta - delta2);
  plan.tag = base_tag(Branch::BroomA, t);
  if (small || padded) {
    plan.subcase_padded = padded;
    plan.tag.r = th.half_up;
    plan.selection = select_subdigraph(d, k, plan.tag.r);
    plan.tag.detail = padded ? "padded-broom" : "small-broom";
  } else {
    plan.tag.r = std::min(th.five_twelfths_up, k - delta);
    plan.selection = select_subdigraph(d, k, plan.tag.r);
    plan.tag.branch = plan.selection.tag == SelectionCase::I ? Branch::BroomB_I : Branch::BroomB_II;
    plan.tag.detail = plan.tag.r == k - delta && plan.tag.r < th.five_twelfths_up ? "r=k-Delta" : "r=ceil(5k/12)";
  }
  return plan;
}

BroomEmbedding embed_double_broom(const Digraph& d, const BroomPlan& plan, const AntiTree& t,
                                  const EmbedOptions& opt) {
  BroomEmbedding out;
  Ctx c{opt, out.trace};
  try {
    out.partial = double_broom_impl(d, plan, t, c);
    for (VertexId x : plan.broom.vertices) {
      if (out.partial.map[x] < 0) throw InternalAssertion("broom-cover", "broom vertex " + str(x) + " unplaced");
    }
    out.ok = true;
  } catch (const Error& ex) {
    out.message = ex.what();
  }
  return out;
}

EmbedOutcome extend_from_broom(const Digraph& d, const BroomPlan& plan, const AntiTree& t, const Embedding& partial,
                               const EmbedOptions& opt) {
  return guarded(d, t, opt, plan.tag, [&](Ctx& c, CaseTag&) {
    Embedding e = extend_impl(d, plan, t, partial, c);
    if (plan.tag.branch == Branch::BroomB_II && !respects_mask(t, e, plan.selection.sub)) {
      throw InternalAssertion("suitability-mask", "a non-leaf landed outside the selected core");
    }
    return e;
  });
}

EmbedOutcome embed_big_delta2(const Digraph& d, const AntiTree& t, const EmbedOptions& opt) {
  return with_out_vertex_u(d, t, [&](const Digraph& dd, const AntiTree& tt) {
    const Thresholds th = thresholds(tt.k());
    if (opt.check_hypotheses) {
      if (degree_stats(tt).delta2 < th.quarter + 3) return refused("second degree below floor(k/4)+3");
      if (auto why = density_problem(dd, tt.k())) return refused(*why);
      if (auto bad = freeness_refusal(dd, tt.k())) return *bad;
    }
    BroomPlan plan;
    try {
      plan = plan_double_broom(dd, tt);
    } catch (const Error& ex) {
      EmbedOutcome o;
      o.tag = base_tag(Branch::BroomA, tt);
      o.status = opt.check_hypotheses ? OutcomeStatus::InternalAssertion : OutcomeStatus::Inconclusive;
      o.message = ex.what();
      return o;
    }
    const BroomEmbedding be = embed_double_broom(dd, plan, tt, opt);
    if (!be.ok) {
      EmbedOutcome o;
      o.tag = plan.tag;
      o.trace = be.trace;
      o.status = opt.check_hypotheses ? OutcomeStatus::InternalAssertion : OutcomeStatus::Inconclusive;
      o.message = be.message;
      return o;
    }
    EmbedOutcome o = extend_from_broom(dd, plan, tt, be.partial, opt);
    Trace merged = be.trace;
    merged.append(o.trace);
    o.trace = std::move(merged);
    return o;
  });
}

EmbedOutcome oracle_fallback(const Digraph& d, const AntiTree& t, std::uint64_t budget) {
  EmbedOutcome o;
  CaseTag tag = base_tag(Branch::Oracle, t);
  o.tag = tag;
  const SearchStats st = oracle_embed(d, t, budget);
  o.fallback = st;
  o.trace.event("oracle", std::string(to_string(st.verdict)) + " after " +
                              str(static_cast<long>(st.nodes_expanded)) + " nodes");
  switch (st.verdict) {
    case Verdict::Embeds:
      o.status = OutcomeStatus::Success;
      o.embedding = st.witness;
      break;
    case Verdict::NotContained:
      o.status = OutcomeStatus::Refused;
      o.failure = HypothesisReport{"exhaustive search: the tree is not contained in the host", std::nullopt};
      break;
    case Verdict::Inconclusive:
      o.status = OutcomeStatus::Inconclusive;
      o.message = "node budget exhausted";
      break;
  }
  return o;
}

std::string outcome_to_json(const EmbedOutcome& o) {
  using nlohmann::json;
  json j;
  j["status"] = to_string(o.status);
  j["exit_code"] = o.exit_code();
  j["used_net"] = o.used_net;
  j["message"] = o.message;
  if (o.embedding) j["embedding"] = o.embedding->map;
  if (o.tag) {
    j["tag"] = {{"branch", to_string(o.tag->branch)}, {"k", o.tag->k},         {"s", o.tag->s},
                {"delta", o.tag->delta},             {"delta2", o.tag->delta2}, {"r", o.tag->r},
                {"detail", o.tag->detail}};
  }
  if (o.failure) {
    json f{{"reason", o.failure->reason}};
    if (o.failure->witness) {
      const auto& w = *o.failure->witness;
      f["witness"] = {{"a", w.a},
                      {"b", w.b},
                      {"sign_a", std::string(1, sign_char(w.sign_a))},
                      {"sign_b", std::string(1, sign_char(w.sign_b))},
                      {"common", w.common}};
    }
    j["failure"] = f;
  }
  json ev = json::array();
  for (const auto& e : o.trace.events) ev.push_back({{"tag", e.tag}, {"detail", e.detail}});
  json cp = json::array();
  for (const auto& c : o.trace.checkpoints) cp.push_back({{"tag", c.tag}, {"ok", c.ok}, {"detail", c.detail}});
  j["trace"] = {{"events", ev}, {"checkpoints", cp}, {"failed_checkpoints", o.trace.failed()}};
  if (o.fallback) {
    j["fallback"] = {{"verdict", to_string(o.fallback->verdict)},
                     {"nodes_expanded", o.fallback->nodes_expanded},
                     {"max_depth", o.fallback->max_depth},
                     {"elapsed_ms", o.fallback->elapsed_ms}};
  }
  return j.dump(2);
}

}  // namespace antiembed
