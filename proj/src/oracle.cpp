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

#include "antiembed/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "antiembed/errors.hpp"

namespace antiembed {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Embeds: return "embeds";
    case Verdict::NotContained: return "not-contained";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

VertexId centroid(const AntiTree& t) {
  const int n = t.order();
  const RootedAntiTree r = rooted_view(t, 0);
  std::vector<int> sub(n, 1);
  for (auto it = r.bfs_order.rbegin(); it != r.bfs_order.rend(); ++it) {
    if (r.parent[*it] >= 0) sub[r.parent[*it]] += sub[*it];
  }
  VertexId best = 0;
  int best_score = n + 1;
  for (VertexId v = 0; v < n; ++v) {
    int worst = n - sub[v];
    for (VertexId c : r.children[v]) worst = std::max(worst, sub[c]);
    if (worst < best_score) {
      best_score = worst;
      best = v;
    }
  }
  return best;
}

class Searcher {
 public:
  explicit Searcher(const SearchProblem& p) : p_(p), d_(*p.host), t_(*p.tree) {}

  SearchStats run() {
    const auto start = std::chrono::steady_clock::now();
    const int nt = t_.order();
    const int nh = d_.order();
    if (!p_.fixed.empty() && static_cast<int>(p_.fixed.size()) != nt) {
      throw InvalidInput("search: fixed vector has the wrong length");
    }
    if (!p_.domains.empty() && static_cast<int>(p_.domains.size()) != nt) {
      throw InvalidInput("search: domain vector has the wrong length");
    }
    VertexId root = -1;
    for (VertexId v = 0; v < nt && root < 0; ++v) {
      if (pinned(v) >= 0) root = v;
    }
    if (root < 0) root = centroid(t_);
    rooted_ = rooted_view(t_, root);
    img_.assign(nt, -1);
    free_ = VertexSet(nh);
    for (VertexId h = 0; h < nh; ++h) free_.insert(h);
    if (p_.blocked) free_ -= *p_.blocked;
    reserved_ = VertexSet(nh);
    bool pins_ok = true;
    for (VertexId v = 0; v < nt; ++v) {
      const VertexId h = pinned(v);
      if (h < 0) continue;
      if (h >= nh || reserved_.contains(h)) pins_ok = false;
      else reserved_.insert(h);
    }
    SearchStats st;
    if (pins_ok) {
      const bool found = place(0);
      if (found) {
        st.verdict = Verdict::Embeds;
        st.witness = Embedding{img_};
      } else {
        st.verdict = aborted_ ? Verdict::Inconclusive : Verdict::NotContained;
      }
    } else {
      st.verdict = Verdict::NotContained;
    }
    st.nodes_expanded = nodes_;
    st.max_depth = max_depth_;
    st.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return st;
  }

 private:
  VertexId pinned(VertexId v) const { return p_.fixed.empty() ? -1 : p_.fixed[v]; }

  bool admissible(VertexId v, VertexId h) const {
    if (!free_.contains(h)) return false;
    const VertexId pin = pinned(v);
    if (pin >= 0 ? pin != h : reserved_.contains(h)) return false;
    if (!p_.domains.empty() && p_.domains[v] && !p_.domains[v]->contains(h)) return false;
    const Sign s = t_.sign(v);
    if (d_.degree(h, s) < t_.degree(v)) return false;
    const int need = static_cast<int>(rooted_.children[v].size());
    return need == 0 || d_.neighbor_set(h, s).and_count(free_) >= need;
  }

  bool place(std::size_t i) {
    const auto& order = rooted_.bfs_order;
    if (i == order.size()) return true;
    max_depth_ = std::max(max_depth_, static_cast<int>(i) + 1);
    const VertexId v = order[i];
    std::vector<VertexId> cand;
    const VertexId par = rooted_.parent[v];
    if (par < 0) {
      for (VertexId h = 0; h < d_.order(); ++h) {
        if (admissible(v, h)) cand.push_back(h);
      }
    } else {
      for (VertexId h : d_.neighbors(img_[par], t_.sign(par))) {
        if (admissible(v, h)) cand.push_back(h);
      }
    }
    const Sign s = t_.sign(v);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](VertexId a, VertexId b) { return d_.degree(a, s) < d_.degree(b, s); });
    for (VertexId h : cand) {
      if (p_.node_budget && nodes_ >= *p_.node_budget) {
        aborted_ = true;
        return false;
      }
      ++nodes_;
      img_[v] = h;
      free_.erase(h);
      if (place(i + 1)) return true;
      free_.insert(h);
      img_[v] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  const SearchProblem& p_;
  const Digraph& d_;
  const AntiTree& t_;
  RootedAntiTree rooted_;
  std::vector<VertexId> img_;
  VertexSet free_, reserved_;
  std::uint64_t nodes_ = 0;
  int max_depth_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchStats exact_search(const SearchProblem& p) {
  if (p.host == nullptr || p.tree == nullptr) throw InvalidInput("search: host and tree are required");
  SearchStats st = Searcher(p).run();
  if (st.witness && !is_valid_embedding(p.tree->digraph(), *p.host, *st.witness)) {
    throw InternalAssertion("oracle-witness", "search produced an invalid embedding");
  }
  return st;
}

SearchStats oracle_embed(const Digraph& d, const AntiTree& t, std::optional<std::uint64_t> budget) {
  SearchProblem p;
  p.host = &d;
  p.tree = &t;
  p.node_budget = budget;
  return exact_search(p);
}

void enumerate_digraphs(int n, int min_arcs, const std::function<bool(const Digraph&)>& sink, bool dedup,
                        bool allow_large) {
  if (n < 1) throw InvalidInput("enumerate_digraphs: n must be positive");
  if (n > 5 && !allow_large) throw BoundExceeded("enumerate_digraphs is limited to n <= 5");
  if (n > 6) throw BoundExceeded("enumerate_digraphs cannot go beyond n = 6");
  std::vector<Arc> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) pairs.push_back({u, v});
    }
  }
  const int P = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> perm_maps;
  if (dedup) {
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> m(P);
      for (int i = 0; i < P; ++i) {
        const VertexId a = perm[pairs[i].tail], b = perm[pairs[i].head];
        m[i] = a * (n - 1) + (b < a ? b : b - 1);
      }
      perm_maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<Arc> arcs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << P); ++mask) {
    if (__builtin_popcountll(mask) < min_arcs) continue;
    if (dedup) {
      bool least = true;
      for (const auto& m : perm_maps) {
        std::uint64_t img = 0;
        for (int i = 0; i < P; ++i) {
          if ((mask >> i) & 1U) img |= std::uint64_t{1} << m[i];
        }
        if (img < mask) {
          least = false;
          break;
        }
      }
      if (!least) continue;
    }
    arcs.clear();
    for (int i = 0; i < P; ++i) {
      if ((mask >> i) & 1U) arcs.push_back(pairs[i]);
    }
    if (!sink(Digraph(n, arcs))) return;
  }
}

}  // namespace antiembed
