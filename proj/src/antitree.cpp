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

#include "antiembed/antitree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace antiembed {

AntiTree validate_antitree(const Digraph& t) {
  const int n = t.order();
  if (t.size() == 0) throw NotATree("a tree needs at least one arc");
  if (t.size() != n - 1) {
    throw NotATree("expected " + std::to_string(n - 1) + " arcs on " + std::to_string(n) +
                   " vertices, got " + std::to_string(t.size()));
  }
  AntiTree out;
  out.adj_.resize(n);
  for (const Arc& a : t.arcs()) {
    out.adj_[a.tail].push_back(a.head);
    out.adj_[a.head].push_back(a.tail);
  }
  for (auto& l : out.adj_) {
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
      throw NotATree("antiparallel arcs form a cycle");
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : out.adj_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) throw NotATree("underlying graph is disconnected");
  for (VertexId v = 0; v < n; ++v) {
    if (t.in_degree(v) > 0 && t.out_degree(v) > 0) {
      throw NotAntidirected(t.in_neighbors(v).front(), v, t.out_neighbors(v).front());
    }
  }
  out.d_ = t;
  out.sign_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    out.sign_[v] = t.out_degree(v) > 0 ? Sign::Plus : Sign::Minus;
    (out.sign_[v] == Sign::Plus ? out.plus_ : out.minus_).push_back(v);
  }
  return out;
}

AntiTree make_antitree(int n, std::initializer_list<Arc> arcs) {
  return validate_antitree(Digraph(n, arcs));
}

AntiTree reverse_tree(const AntiTree& t) { return validate_antitree(reverse(t.digraph())); }

DegreeStats degree_stats(const AntiTree& t) {
  DegreeStats s;
  const int n = t.order();
  for (VertexId v = 0; v < n; ++v) {
    if (t.degree(v) > s.delta) {
      s.delta = t.degree(v);
      s.argmax_u = v;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v != s.argmax_u && (s.argmax2_v < 0 || t.degree(v) > s.delta2)) {
      s.delta2 = t.degree(v);
      s.argmax2_v = v;
    }
  }
  s.leaves_of.resize(n);
  s.non_leaves_of.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    (t.is_leaf(v) ? s.leaves : s.non_leaves).push_back(v);
    for (VertexId y : t.neighbors(v)) (t.is_leaf(y) ? s.leaves_of[v] : s.non_leaves_of[v]).push_back(y);
  }
  return s;
}

RootedAntiTree rooted_view(const AntiTree& t, VertexId root) {
  if (root < 0 || root >= t.order()) throw InvalidInput("root " + std::to_string(root) + " not in tree");
  RootedAntiTree r;
  const int n = t.order();
  r.root = root;
  r.parent.assign(n, -1);
  r.depth.assign(n, -1);
  r.children.resize(n);
  std::deque<VertexId> q{root};
  r.depth[root] = 0;
  while (!q.empty()) {
    const VertexId x = q.front();
    q.pop_front();
    r.bfs_order.push_back(x);
    for (VertexId y : t.neighbors(x)) {
      if (r.depth[y] < 0) {
        r.depth[y] = r.depth[x] + 1;
        r.parent[y] = x;
        r.children[x].push_back(y);
        q.push_back(y);
      }
    }
  }
  return r;
}

std::vector<int> tree_distances(const AntiTree& t, VertexId src) {
  return rooted_view(t, src).depth;
}

std::vector<VertexId> tree_path(const AntiTree& t, VertexId a, VertexId b) {
  const RootedAntiTree r = rooted_view(t, b);
  std::vector<VertexId> path;
  for (VertexId x = a; x != -1; x = r.parent[x]) path.push_back(x);
  return path;
}

namespace {

// Lexicographically least path of maximum length.
std::vector<VertexId> lex_least_longest_path(const AntiTree& t) {
  const int n = t.order();
  int diam = 0;
  {
    const auto d0 = tree_distances(t, 0);
    const VertexId far = static_cast<VertexId>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    const auto d1 = tree_distances(t, far);
    diam = *std::max_element(d1.begin(), d1.end());
  }
  for (VertexId a = 0; a < n; ++a) {
    const RootedAntiTree r = rooted_view(t, a);
    if (*std::max_element(r.depth.begin(), r.depth.end()) != diam) continue;
    std::vector<int> height(n, 0);
    for (auto it = r.bfs_order.rbegin(); it != r.bfs_order.rend(); ++it) {
      for (VertexId c : r.children[*it]) height[*it] = std::max(height[*it], height[c] + 1);
    }
    std::vector<VertexId> path{a};
    VertexId x = a;
    while (static_cast<int>(path.size()) <= diam) {
      for (VertexId c : r.children[x]) {
        if (height[c] + r.depth[c] == diam) {
          x = c;
          break;
        }
      }
      path.push_back(x);
    }
    return path;
  }
  return {};
}

}  // namespace

SpineDecomposition caterpillar_decompose(const AntiTree& t) {
  SpineDecomposition sd;
  sd.spine = lex_least_longest_path(t);
  const int n = t.order();
  std::vector<int> pos(n, -1);
  for (int i = 0; i < static_cast<int>(sd.spine.size()); ++i) pos[sd.spine[i]] = i;
  sd.leaves_at.resize(n);
  // Distance to the spine by multi-source BFS.
  std::vector<int> dist(n, -1);
  std::deque<VertexId> q;
  for (VertexId s : sd.spine) {
    dist[s] = 0;
    q.push_back(s);
  }
  while (!q.empty()) {
    const VertexId x = q.front();
    q.pop_front();
    for (VertexId y : t.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (dist[v] >= 2) throw NotACaterpillar(v);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (pos[v] >= 0) continue;
    for (VertexId y : t.neighbors(v)) {
      if (pos[y] >= 0) sd.leaves_at[y].push_back(v);
    }
  }
  sd.final_vertex = sd.spine.back();
  const VertexId pen = sd.spine[sd.spine.size() - 2];
  sd.final_arc = t.sign(pen) == Sign::Plus ? Arc{pen, sd.final_vertex} : Arc{sd.final_vertex, pen};
  return sd;
}

bool is_caterpillar(const AntiTree& t) {
  try {
    caterpillar_decompose(t);
    return true;
  } catch (const NotACaterpillar&) {
    return false;
  }
}

bool leaf_stripped_is_path(const AntiTree& t) {
  const int n = t.order();
  std::vector<int> inner_deg(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (t.is_leaf(v)) continue;
    for (VertexId y : t.neighbors(v)) inner_deg[v] += t.is_leaf(y) ? 0 : 1;
  }
  // The non-leaves induce a subtree; it is a path iff no vertex has three
  // non-leaf neighbours.
  for (VertexId v = 0; v < n; ++v) {
    if (!t.is_leaf(v) && inner_deg[v] > 2) return false;
  }
  return true;
}

DoubleBroom double_broom(const AntiTree& t, VertexId u, VertexId v) {
  const int n = t.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidInput("double broom endpoint not in tree");
  if (u == v) throw InvalidInput("double broom needs distinct endpoints");
  DoubleBroom b;
  b.u = u;
  b.v = v;
  b.member.assign(n, 0);
  b.path_uv = tree_path(t, u, v);
  for (VertexId x : b.path_uv) b.member[x] = 1;
  for (VertexId c : {u, v}) {
    b.member[c] = 1;
    for (VertexId y : t.neighbors(c)) b.member[y] = 1;
  }
  for (VertexId x = 0; x < n; ++x) {
    if (b.member[x]) b.vertices.push_back(x);
  }
  return b;
}

InducedTree induced_subtree(const AntiTree& t, std::span<const VertexId> vertices) {
  InducedTree it;
  it.from_original.assign(t.order(), -1);
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId x : sorted) {
    it.from_original[x] = static_cast<VertexId>(it.to_original.size());
    it.to_original.push_back(x);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : t.digraph().arcs()) {
    if (it.from_original[a.tail] >= 0 && it.from_original[a.head] >= 0) {
      arcs.push_back({it.from_original[a.tail], it.from_original[a.head]});
    }
  }
  it.tree = validate_antitree(Digraph(static_cast<int>(sorted.size()), arcs));
  return it;
}

namespace {

std::string rooted_code(const AntiTree& t, VertexId x, VertexId parent) {
  std::vector<std::string> kids;
  for (VertexId y : t.neighbors(x)) {
    if (y != parent) kids.push_back(rooted_code(t, y, x));
  }
  std::sort(kids.begin(), kids.end());
  std::string s(1, sign_char(t.sign(x)));
  s += '(';
  for (const auto& c : kids) s += c;
  s += ')';
  return s;
}

std::vector<VertexId> centers(const AntiTree& t) {
  const int n = t.order();
  std::vector<int> deg(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<VertexId> next;
    remaining -= static_cast<int>(layer.size());
    for (VertexId x : layer) {
      for (VertexId y : t.neighbors(x)) {
        if (--deg[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string canonical_form(const AntiTree& t) {
  std::string best;
  for (VertexId c : centers(t)) {
    std::string code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<AntiTree> enumerate_antitrees(int k, int max_k) {
  if (k < 1) throw InvalidInput("enumerate_antitrees needs k >= 1");
  if (k > max_k) {
    throw BoundExceeded("enumerate_antitrees: k = " + std::to_string(k) + " exceeds bound " +
                        std::to_string(max_k));
  }
  std::map<std::string, AntiTree> level;
  {
    AntiTree a = make_antitree(2, {{0, 1}});
    level.emplace(canonical_form(a), a);
  }
  for (int j = 1; j < k; ++j) {
    std::map<std::string, AntiTree> next;
    for (const auto& [code, t] : level) {
      const VertexId fresh = t.order();
      for (VertexId x = 0; x < t.order(); ++x) {
        std::vector<Arc> arcs = t.digraph().arcs();
        arcs.push_back(t.sign(x) == Sign::Plus ? Arc{x, fresh} : Arc{fresh, x});
        AntiTree grown = validate_antitree(Digraph(fresh + 1, arcs));
        next.emplace(canonical_form(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<AntiTree> out;
  out.reserve(level.size());
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

}  // namespace antiembed
