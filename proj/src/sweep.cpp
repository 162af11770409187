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

#include "antiembed/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "antiembed/antitree.hpp"
#include "antiembed/convex.hpp"
#include "antiembed/embedder.hpp"
#include "antiembed/embedding.hpp"
#include "antiembed/errors.hpp"
#include "antiembed/freeness.hpp"
#include "antiembed/generators.hpp"
#include "antiembed/oracle.hpp"
#include "antiembed/subdigraph.hpp"
#include "json.hpp"

namespace antiembed {

const std::vector<SuiteInfo>& sweep_suites() {
  static const std::vector<SuiteInfo> suites = {
      {"prop3-exhaustive", 1, "caterpillar embedding on every small labelled host above the density bound"},
      {"good-arc-bounds", 2, "good-arc lower bounds and soundness against brute force on random convex hosts"},
      {"good-arc-sets", 2, "DP good set equals the brute-force good set at n <= 5, k <= 3"},
      {"selector-audit", 3, "subdigraph selection and pseudo-degree pruning revalidated from scratch"},
      {"pg-end-to-end", 4, "full pipeline on the PG(2,q) incidence host with random trees"},
      {"hypothesis-class-empty", 4, "no small host is both dense and K_{2,1}-free for k = 2..12"},
      {"burr-tightness", 5, "out-star absent from the extremal host, present after any added arc"},
      {"differential", 6, "entry points against the exact oracle on small random pairs"},
      {"reversal", 7, "simultaneous reversal returns the identical vertex map"},
  };
  return suites;
}

namespace {

using nlohmann::json;

constexpr std::size_t kMaxRows = 25;

struct Defaults {
  long samples;
  int n_max;
  int k_max;
  int q;
};

Defaults defaults_for(const std::string& suite) {
  if (suite == "prop3-exhaustive") return {100000, 4, 3, 0};
  if (suite == "good-arc-bounds") return {10000, 7, 4, 0};
  if (suite == "good-arc-sets") return {10000, 5, 3, 0};
  if (suite == "selector-audit") return {10000, 14, 6, 0};
  if (suite == "pg-end-to-end") return {200, 0, 13, 25};
  if (suite == "hypothesis-class-empty") return {0, 5, 12, 0};
  if (suite == "burr-tightness") return {0, 0, 6, 0};
  if (suite == "differential") return {10000, 12, 5, 0};
  if (suite == "reversal") return {1000, 12, 6, 25};
  throw InvalidInput("unknown suite '" + suite + "'");
}

SweepConfig resolved(const SweepConfig& cfg) {
  const Defaults def = defaults_for(cfg.suite);
  SweepConfig c = cfg;
  if (c.samples < 0) c.samples = def.samples;
  if (c.n_max < 0) c.n_max = def.n_max;
  if (c.k_max < 0) c.k_max = def.k_max;
  if (c.q < 0) c.q = def.q;
  if (c.jobs <= 0) c.jobs = std::max(1U, std::thread::hardware_concurrency());
  return c;
}

json graph_json(const Digraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  return {{"n", d.order()}, {"arcs", arcs}};
}

json pair_json(const Digraph& d, const AntiTree& t) { return {{"host", graph_json(d)}, {"tree", graph_json(t.digraph())}}; }

// Result of one instance (or one group of instances sharing a host).
struct Item {
  long weight = 1;  // (host, tree) pairs checked; 0 = not counted
  bool ok = true;
  std::string reason;
  json instance;
  long failed_cp = 0;
  std::string bucket;
};

struct Tally {
  long instances = 0;
  long failures = 0;
  long failed_cp = 0;
  json rows = json::array();
  std::map<std::string, long> buckets;
  json details = json::object();

  void fail(long index, const std::string& reason, const json& instance) {
    ++failures;
    if (rows.size() < kMaxRows) rows.push_back({{"index", index}, {"reason", reason}, {"instance", instance}});
  }
  void add(long index, const Item& it) {
    if (it.weight <= 0) return;
    instances += it.weight;
    failed_cp += it.failed_cp;
    if (!it.bucket.empty()) ++buckets[it.bucket];
    if (!it.ok) fail(index, it.reason, it.instance);
  }
};

// Runs f over [0, count) on a worker pool and folds results in index order,
// so the report does not depend on scheduling.
void run_items(long count, int jobs, Tally& tally, const std::function<Item(long)>& f) {
  std::vector<Item> items(count);
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i = next++; i < count; i = next++) {
      try {
        items[i] = f(i);
      } catch (const std::exception& ex) {
        items[i].ok = false;
        items[i].reason = std::string("exception: ") + ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (long i = 0; i < count; ++i) tally.add(i, items[i]);
}

std::mt19937_64 rng_for(std::uint64_t seed, long i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
  return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool dense(const Digraph& d, int k) { return static_cast<long>(d.size()) > static_cast<long>(k - 1) * d.order(); }

std::vector<AntiTree> caterpillar_classes(int k) {
  std::vector<AntiTree> out;
  for (AntiTree& t : enumerate_antitrees(k)) {
    if (is_caterpillar(t)) out.push_back(std::move(t));
  }
  return out;
}

std::string check_caterpillar_run(const Digraph& d, const AntiTree& t) {
  try {
    const Embedding e = embed_caterpillar(d, t);
    const auto chk = check_embedding(t.digraph(), d, e);
    return chk.ok ? std::string() : "invalid embedding: " + chk.reason;
  } catch (const std::exception& ex) {
    return std::string("embed_caterpillar threw: ") + ex.what();
  }
}

// ---- criterion 1 ------------------------------------------------------------

void suite_prop3(const SweepConfig& c, Tally& tally) {
  std::map<int, std::vector<AntiTree>> cats;
  for (int k = 1; k <= std::max(c.k_max, 4); ++k) cats[k] = caterpillar_classes(k);
  long exhaustive_pairs = 0;
  for (int n = 2; n <= c.n_max; ++n) {
    std::vector<Digraph> hosts;
    enumerate_digraphs(n, 1, [&](const Digraph& d) {
      hosts.push_back(d);
      return true;
    });
    Tally part;
    run_items(static_cast<long>(hosts.size()), c.jobs, part, [&](long i) {
      Item it;
      it.weight = 0;
      const Digraph& d = hosts[i];
      for (int k = 1; k <= c.k_max && it.ok; ++k) {
        if (!dense(d, k)) break;
        for (const AntiTree& t : cats[k]) {
          ++it.weight;
          const std::string err = check_caterpillar_run(d, t);
          if (!err.empty()) {
            it.ok = false;
            it.reason = err;
            it.instance = pair_json(d, t);
            break;
          }
        }
      }
      return it;
    });
    tally.details["exhaustive"][std::to_string(n)] = {{"hosts", hosts.size()}, {"pairs", part.instances}};
    exhaustive_pairs += part.instances;
    tally.instances += part.instances;
    tally.failures += part.failures;
    for (auto& r : part.rows) {
      if (tally.rows.size() < kMaxRows) tally.rows.push_back(r);
    }
  }
  // Random sample at n = 5: half the hosts carry at least 16 arcs so that k = 4 applies.
  Tally part;
  run_items(c.samples, c.jobs, part, [&](long i) {
    auto rng = rng_for(c.seed, i);
    const int m = (i % 2 == 0) ? uniform(rng, 16, 20) : uniform(rng, 1, 15);
    const Digraph d = gen_random_arcs(5, m, rng());
    Item it;
    it.weight = 0;
    for (int k = 1; k <= 4 && it.ok; ++k) {
      if (!dense(d, k)) break;
      for (const AntiTree& t : cats[k]) {
        ++it.weight;
        const std::string err = check_caterpillar_run(d, t);
        if (!err.empty()) {
          it.ok = false;
          it.reason = err;
          it.instance = pair_json(d, t);
          break;
        }
      }
    }
    return it;
  });
  tally.details["sample_n5"] = {{"hosts", c.samples}, {"pairs", part.instances}};
  tally.instances += part.instances;
  tally.failures += part.failures;
  for (auto& r : part.rows) {
    if (tally.rows.size() < kMaxRows) tally.rows.push_back(r);
  }
  tally.details["exhaustive_pairs"] = exhaustive_pairs;
}

// ---- criterion 2 ------------------------------------------------------------

json convex_json(const ConvexDigraph& cd, const AntiTree& t) {
  json j = pair_json(cd.digraph(), t);
  j["order"] = cd.order();
  return j;
}

std::vector<Arc> sorted_arcs(std::vector<Arc> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void suite_good_arc_bounds(const SweepConfig& c, Tally& tally) {
  run_items(c.samples, c.jobs, tally, [&](long i) {
    auto rng = rng_for(c.seed, i);
    const int n = uniform(rng, 2, c.n_max);
    const int k = uniform(rng, 1, c.k_max);
    const AntiTree t = random_caterpillar(k, rng());
    const Digraph d = gen_random_arcs(n, uniform(rng, 0, n * (n - 1)), rng());
    const ConvexDigraph cd = ConvexDigraph::with_random_order(d, rng());
    Item it;
    it.instance = convex_json(cd, t);
    const long a = d.size();
    long dplus = 0;
    long dminus = 0;
    for (VertexId v = 0; v < n; ++v) {
      dplus += d.out_degree(v) > 0;
      dminus += d.in_degree(v) > 0;
    }
    const long tplus = static_cast<long>(t.plus_vertices().size());
    const long tminus = static_cast<long>(t.minus_vertices().size());
    const long bound_density = a - static_cast<long>(k - 1) * n;
    const long bound_mindeg = a - (tplus - 1) * dminus - (tminus - 1) * dplus;
    const auto brute = sorted_arcs(brute_force_good_arcs(cd, t));
    for (const auto& [variant, bound, name] :
         {std::tuple{GoodArcVariant::Density, bound_density, "density"},
          std::tuple{GoodArcVariant::MinDegree, bound_mindeg, "mindeg"}}) {
      try {
        const GoodArcTable tab = compute_good_arcs(cd, t, variant);
        const auto found = tab.final_good();
        if (static_cast<long>(found.size()) < bound) {
          it.ok = false;
          it.reason = std::string(name) + " bound violated: " + std::to_string(found.size()) + " < " +
                      std::to_string(bound);
        }
        for (const Arc& arc : found) {
          if (!std::binary_search(brute.begin(), brute.end(), arc)) {
            it.ok = false;
            it.reason = std::string(name) + " DP arc (" + std::to_string(arc.tail) + "," + std::to_string(arc.head) +
                        ") is not good by brute force";
          }
        }
      } catch (const std::exception& ex) {
        it.ok = false;
        it.reason = std::string(name) + " threw: " + ex.what();
      }
    }
    return it;
  });
}

void suite_good_arc_sets(const SweepConfig& c, Tally& tally) {
  long dp_total = 0;
  long brute_total = 0;
  std::mutex mu;
  run_items(c.samples, c.jobs, tally, [&](long i) {
    auto rng = rng_for(c.seed, i);
    const int n = uniform(rng, 2, std::min(c.n_max, 5));
    const int k = uniform(rng, 1, std::min(c.k_max, 3));
    const AntiTree t = random_caterpillar(k, rng());
    const Digraph d = gen_random_arcs(n, uniform(rng, 0, n * (n - 1)), rng());
    const ConvexDigraph cd = ConvexDigraph::with_random_order(d, rng());
    const auto dp = sorted_arcs(good_arcs(cd, t).final_good());
    const auto brute = sorted_arcs(brute_force_good_arcs(cd, t));
    {
      std::lock_guard lock(mu);
      dp_total += static_cast<long>(dp.size());
      brute_total += static_cast<long>(brute.size());
    }
    Item it;
    if (dp != brute) {
      it.ok = false;
      it.reason = "DP finds " + std::to_string(dp.size()) + " good arcs, brute force " + std::to_string(brute.size());
      it.instance = convex_json(cd, t);
    }
    return it;
  });
  tally.details["dp_good_total"] = dp_total;
  tally.details["brute_good_total"] = brute_total;
}

// ---- criterion 3 ------------------------------------------------------------

bool is_subdigraph(const Digraph& sub, const Digraph& d) {
  if (sub.order() != d.order()) return false;
  return std::all_of(sub.arcs().begin(), sub.arcs().end(), [&](const Arc& a) { return d.has_arc(a.tail, a.head); });
}

// Recomputes every selection condition without using the audit.
std::string recheck_selection(const Digraph& d, const SelectionResult& sel, int k, int r) {
  const Digraph& s = sel.sub;
  if (!is_subdigraph(s, d)) return "output is not a subdigraph";
  std::vector<VertexId> plus;
  std::vector<VertexId> minus;
  int pmin = 0;
  int mmin = 0;
  int omax = 0;
  int imax = 0;
  for (VertexId v = 0; v < s.order(); ++v) {
    const int o = s.out_degree(v);
    const int in = s.in_degree(v);
    if (o > 0) {
      plus.push_back(v);
      pmin = pmin == 0 ? o : std::min(pmin, o);
    }
    if (in > 0) {
      minus.push_back(v);
      mmin = mmin == 0 ? in : std::min(mmin, in);
    }
    omax = std::max(omax, o);
    imax = std::max(imax, in);
  }
  if (s.size() == 0) return "empty output";
  if (!(2L * s.size() > static_cast<long>(k - 1) * static_cast<long>(plus.size() + minus.size()))) {
    return "density condition fails";
  }
  for (VertexId a : plus) {
    for (VertexId b : minus) {
      if (s.out_degree(a) + s.in_degree(b) < k) {
        return "pair-sum condition fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
  }
  if (sel.tag == SelectionCase::I) {
    if (2 * pmin < k || mmin < r || omax < k || plus.size() > minus.size()) return "reported case I conditions fail";
    if (sel.witness_vertex < 0 || s.out_degree(sel.witness_vertex) < k) return "case I witness wrong";
  } else {
    if (2 * pmin < k || 2 * mmin < k || imax < k) return "reported case II conditions fail";
    for (VertexId a : plus) {
      if (d.out_degree(a) <= k - r) return "case II host out-degree condition fails";
    }
    if (sel.witness_vertex < 0 || s.in_degree(sel.witness_vertex) < k) return "case II witness wrong";
  }
  return {};
}

std::string recheck_prune(const Digraph& d, const Digraph& p, int k) {
  if (!is_subdigraph(p, d)) return "output is not a subdigraph";
  if (p.size() == 0) return "empty output";
  const int half = (k + 1) / 2;
  for (VertexId v = 0; v < p.order(); ++v) {
    if (p.out_degree(v) > 0 && p.out_degree(v) < half) return "out-degree below ceil(k/2) at " + std::to_string(v);
    if (p.in_degree(v) > 0 && p.in_degree(v) < half) return "in-degree below ceil(k/2) at " + std::to_string(v);
  }
  return {};
}

Digraph random_dense_host(std::mt19937_64& rng, int n, int k, int extra) {
  const long lo = static_cast<long>(k - 1) * n + 1;
  const long hi = std::min<long>(static_cast<long>(n) * (n - 1), lo + extra);
  return gen_random_arcs(n, static_cast<int>(std::uniform_int_distribution<long>(lo, hi)(rng)), rng());
}

void suite_selector(const SweepConfig& c, Tally& tally) {
  run_items(2 * c.samples, c.jobs, tally, [&](long i) {
    auto rng = rng_for(c.seed, i);
    Item it;
    if (i % 2 == 0) {
      const int k = uniform(rng, 1, c.k_max);
      const int n = uniform(rng, k + 1, std::max(k + 1, c.n_max));
      const Digraph d = random_dense_host(rng, n, k, 2 * n);
      const int r = uniform(rng, 1, (k + 1) / 2);
      it.bucket = "selection";
      it.instance = {{"host", graph_json(d)}, {"k", k}, {"r", r}};
      const SelectionResult sel = select_subdigraph(d, k, r);
      it.bucket += sel.tag == SelectionCase::I ? ":I" : ":II";
      const std::string err = recheck_selection(d, sel, k, r);
      if (!err.empty()) {
        it.ok = false;
        it.reason = err;
      }
    } else {
      const int k = uniform(rng, 1, c.k_max + 2);
      const int n = uniform(rng, k + 1, std::max(k + 1, c.n_max + 2));
      const Digraph d = random_dense_host(rng, n, k, 2 * n);
      it.bucket = "prune";
      it.instance = {{"host", graph_json(d)}, {"k", k}};
      const std::string err = recheck_prune(d, prune_pseudo(d, k), k);
      if (!err.empty()) {
        it.ok = false;
        it.reason = err;
      }
    }
    return it;
  });
}

// ---- criterion 4 ------------------------------------------------------------

// Trees for the PG suites: even indices keep the second degree small, odd
// indices push it to floor(k/4)+3 or more.
AntiTree pg_tree(std::uint64_t seed, long i, int k) {
  const int small = k / 4 + 2;
  std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(i) * 7919ULL;
  for (;; ++s) {
    if (i % 2 == 0) {
      const AntiTree t = random_antitree(k, s, 0.3 * static_cast<double>((i / 2) % 3));
      if (degree_stats(t).delta2 <= small) return t;
    } else {
      const AntiTree t = random_two_hub_antitree(k, s);
      if (degree_stats(t).delta2 > small) return t;
    }
  }
}

std::string bucket_of(const EmbedOutcome& o) {
  if (!o.tag) return "none";
  return std::string(to_string(o.tag->branch)) + (o.tag->detail.empty() ? "" : ":" + o.tag->detail);
}

void suite_pg(const SweepConfig& c, Tally& tally) {
  const Digraph d = gen_incidence(c.q);
  const int k = c.k_max;
  const int s = s_for_k(k);
  const std::string plane = audit_projective_plane(d, c.q);
  const bool free = is_k2s_free(d, s);
  const bool is_dense = dense(d, k);
  tally.details["host"] = {{"q", c.q}, {"n", d.order()}, {"arcs", d.size()}, {"k", k}, {"s", s},
                           {"plane_audit", plane.empty() ? "ok" : plane}, {"k2s_free", free}, {"dense", is_dense}};
  if (!plane.empty() || !free || !is_dense) {
    tally.fail(-1, "host audit failed", tally.details["host"]);
    return;
  }
  long nets = 0;
  long small = 0;
  std::mutex mu;
  run_items(c.samples, c.jobs, tally, [&](long i) {
    const AntiTree t = pg_tree(c.seed, i, k);
    EmbedOptions opt;
    const EmbedOutcome o = embed_antitree(d, t, opt);
    Item it;
    it.bucket = bucket_of(o);
    it.failed_cp = o.trace.failed();
    {
      std::lock_guard lock(mu);
      nets += o.used_net;
      small += degree_stats(t).delta2 <= k / 4 + 2;
    }
    if (!o.ok()) {
      it.ok = false;
      it.reason = std::string(to_string(o.status)) + ": " + o.message;
      it.instance = {{"tree", graph_json(t.digraph())}, {"host", "PG(2," + std::to_string(c.q) + ")"}};
    } else if (!is_valid_embedding(t.digraph(), d, *o.embedding)) {
      it.ok = false;
      it.reason = "returned embedding fails validation";
      it.instance = {{"tree", graph_json(t.digraph())}};
    }
    return it;
  });
  tally.details["net_completions"] = nets;
  tally.details["small_delta2_trees"] = small;
  tally.details["large_delta2_trees"] = c.samples - small;
}

void suite_empty_class(const SweepConfig& c, Tally& tally) {
  std::map<int, long> dense_hosts;
  long free_k1 = 0;
  for (int n = 1; n <= c.n_max; ++n) {
    enumerate_digraphs(n, n + 1, [&](const Digraph& d) {
      const int top = std::min<int>(c.k_max, d.size() / n + (d.size() % n == 0 ? 0 : 1));
      int kmax = 1;
      while (kmax + 1 <= c.k_max && dense(d, kmax + 1)) ++kmax;
      (void)top;
      for (int k = 2; k <= kmax; ++k) ++dense_hosts[k];
      if (kmax >= 2) {
        ++tally.instances;
        if (is_k2s_free(d, 1)) tally.fail(tally.instances, "dense host is K_{2,1}-free", graph_json(d));
      }
      return true;
    });
  }
  // k = 1: the class is non-empty and every member embeds the single arc.
  const AntiTree arc = make_antitree(2, {{0, 1}});
  for (int n = 2; n <= std::min(c.n_max, 4); ++n) {
    enumerate_digraphs(n, 1, [&](const Digraph& d) {
      if (!is_k2s_free(d, 1)) return true;
      ++free_k1;
      ++tally.instances;
      const EmbedOutcome o = embed_antitree(d, arc);
      if (!o.ok() || !is_valid_embedding(arc.digraph(), d, *o.embedding)) {
        tally.fail(tally.instances, "k = 1 member not embedded", graph_json(d));
      }
      return true;
    });
  }
  json per_k = json::object();
  for (const auto& [k, cnt] : dense_hosts) per_k[std::to_string(k)] = cnt;
  tally.details["dense_hosts_per_k"] = per_k;
  tally.details["k1_class_members"] = free_k1;
}

// ---- criterion 5 ------------------------------------------------------------

AntiTree out_star(int k) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= k; ++i) arcs.push_back({0, i});
  return validate_antitree(Digraph(k + 1, arcs));
}

void suite_burr(const SweepConfig& c, Tally& tally) {
  json per_k = json::object();
  for (int k = 2; k <= c.k_max; ++k) {
    const Digraph d = gen_burr(k);
    const AntiTree star = out_star(k);
    const int n = d.order();
    json info = {{"n", n}, {"arcs", d.size()}};
    ++tally.instances;
    bool regular = n == 4 * k - 4 && d.size() == (k - 1) * n;
    for (VertexId v = 0; v < n; ++v) regular = regular && d.out_degree(v) == k - 1 && d.in_degree(v) == k - 1;
    if (!regular) tally.fail(k, "extremal host has the wrong shape", graph_json(d));
    const EmbedOutcome refusal = embed_antitree(d, star);
    ++tally.instances;
    if (refusal.status != OutcomeStatus::Refused) {
      tally.fail(k, std::string("pipeline did not refuse: ") + to_string(refusal.status), graph_json(d));
    }
    const SearchStats st = oracle_embed(d, star);
    info["oracle"] = to_string(st.verdict);
    info["oracle_nodes"] = st.nodes_expanded;
    ++tally.instances;
    if (st.verdict != Verdict::NotContained) tally.fail(k, "oracle did not certify non-containment", graph_json(d));
    std::vector<Arc> missing;
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        if (x != y && !d.has_arc(x, y)) missing.push_back({x, y});
      }
    }
    Tally part;
    run_items(static_cast<long>(missing.size()), c.jobs, part, [&](long i) {
      const Arc extra[1] = {missing[i]};
      const Digraph d2 = with_arcs(d, extra);
      Item it;
      const std::string err = check_caterpillar_run(d2, star);
      if (!err.empty()) {
        it.ok = false;
        it.reason = err;
        it.instance = pair_json(d2, star);
      }
      return it;
    });
    info["added_arc_hosts"] = missing.size();
    tally.instances += part.instances;
    tally.failures += part.failures;
    for (auto& r : part.rows) {
      if (tally.rows.size() < kMaxRows) tally.rows.push_back(r);
    }
    per_k[std::to_string(k)] = info;
  }
  tally.details["per_k"] = per_k;
}

// ---- criterion 6 ------------------------------------------------------------

bool mindeg_applies(const Digraph& d, const AntiTree& t) {
  if (!is_caterpillar(t)) return false;
  const auto [dp, dm] = plus_minus_sets(d);
  const long tp = static_cast<long>(t.plus_vertices().size());
  const long tm = static_cast<long>(t.minus_vertices().size());
  if (!(2L * d.size() > static_cast<long>(t.k() - 1) * static_cast<long>(dp.size() + dm.size()))) return false;
  const bool host_le = dp.size() <= dm.size();
  const bool host_ge = dp.size() >= dm.size();
  return (host_le && tp <= tm) || (host_ge && tp >= tm);
}

void suite_differential(const SweepConfig& c, Tally& tally) {
  run_items(c.samples, c.jobs, tally, [&](long i) {
    auto rng = rng_for(c.seed, i);
    const int n = uniform(rng, 2, c.n_max);
    const int k = uniform(rng, 1, c.k_max);
    const AntiTree t = (i % 2 == 0) ? random_caterpillar(k, rng()) : random_antitree(k, rng(), 0.3 * (i % 3));
    const int full = n * (n - 1);
    const bool want_dense = (i % 4 != 3) && static_cast<long>(k - 1) * n + 1 <= full;
    const Digraph d = want_dense ? random_dense_host(rng, n, k, 2 * n) : gen_random_arcs(n, uniform(rng, 0, full), rng());
    const SearchStats truth = oracle_embed(d, t);
    Item it;
    it.instance = pair_json(d, t);
    auto mismatch = [&](const std::string& why) {
      if (it.ok) {
        it.ok = false;
        it.reason = why;
      }
    };
    auto sound = [&](const EmbedOutcome& o, const char* who) {
      it.failed_cp += o.trace.failed();
      if (!o.ok()) return;
      if (!is_valid_embedding(t.digraph(), d, *o.embedding)) mismatch(std::string(who) + ": invalid embedding");
      if (truth.verdict == Verdict::NotContained) mismatch(std::string(who) + ": success where the oracle says absent");
    };
    EmbedOptions force;
    force.check_hypotheses = false;
    force.oracle_fallback = false;
    sound(embed_antitree(d, t, force), "pipeline (forced)");

    EmbedOptions strict;
    strict.oracle_fallback = false;
    const EmbedOutcome o = embed_antitree(d, t, strict);
    sound(o, "pipeline");
    const bool hyp = dense(d, k) && is_k2s_free(d, s_for_k(k));
    if (hyp) {
      it.bucket = "hypotheses-hold";
      if (!o.ok() || truth.verdict != Verdict::Embeds) mismatch("verdict differs from oracle under the hypotheses");
    } else if (o.status != OutcomeStatus::Refused) {
      mismatch("pipeline did not refuse outside the hypotheses");
    } else if (o.failure && o.failure->witness && !witness_holds(d, *o.failure->witness, s_for_k(k))) {
      mismatch("refusal witness does not hold");
    }
    sound(embed_low_delta(d, t, strict), "low-delta entry");
    sound(embed_mid_delta(d, t, strict), "mid-delta entry");
    sound(embed_big_delta2(d, t, strict), "big-delta2 entry");

    if (is_caterpillar(t) && dense(d, k)) {
      if (it.bucket.empty()) it.bucket = "caterpillar-dense";
      const std::string err = check_caterpillar_run(d, t);
      if (!err.empty()) mismatch("caterpillar entry: " + err);
      if (truth.verdict != Verdict::Embeds) mismatch("caterpillar precondition holds but oracle disagrees");
    }
    if (mindeg_applies(d, t)) {
      try {
        const Embedding e = embed_caterpillar_mindeg(d, t);
        if (!is_valid_embedding(t.digraph(), d, e)) mismatch("mindeg entry: invalid embedding");
      } catch (const std::exception& ex) {
        mismatch(std::string("mindeg entry threw: ") + ex.what());
      }
      if (truth.verdict != Verdict::Embeds) mismatch("mindeg precondition holds but oracle disagrees");
    }
    if (it.bucket.empty()) it.bucket = truth.verdict == Verdict::Embeds ? "other-embeds" : "other-absent";
    return it;
  });
}

// ---- criterion 7 ------------------------------------------------------------

void suite_reversal(const SweepConfig& c, Tally& tally) {
  const Digraph pg = gen_incidence(c.q);
  run_items(c.samples, c.jobs, tally, [&](long i) {
    auto rng = rng_for(c.seed, i);
    Item it;
    Digraph d;
    AntiTree t;
    EmbedOptions opt;
    if (i % 10 == 0) {
      d = pg;
      t = pg_tree(c.seed + 17, i / 10, 13);
      it.bucket = "pg";
    } else {
      const int k = uniform(rng, 1, c.k_max);
      const int n = uniform(rng, k + 1, std::max(k + 1, c.n_max));
      d = random_dense_host(rng, n, k, 3 * n);
      t = (i % 2 == 0) ? random_antitree(k, rng(), 0.3 * (i % 3)) : random_two_hub_antitree(k, rng());
      opt.check_hypotheses = false;
      opt.oracle_fallback = false;
      it.bucket = "forced";
    }
    const EmbedOutcome a = embed_antitree(d, t, opt);
    const EmbedOutcome b = embed_antitree(reverse(d), reverse_tree(t), opt);
    it.bucket += a.ok() ? ":success" : ":no-success";
    if (a.ok() != b.ok() || a.status != b.status) {
      it.ok = false;
      it.reason = std::string("status differs: ") + to_string(a.status) + " vs " + to_string(b.status);
    } else if (a.ok() && a.embedding->map != b.embedding->map) {
      it.ok = false;
      it.reason = "vertex maps differ";
    }
    if (!it.ok) it.instance = pair_json(d, t);
    return it;
  });
}

}  // namespace

void validate_config(const SweepConfig& cfg) {
  const auto& suites = sweep_suites();
  if (std::none_of(suites.begin(), suites.end(), [&](const SuiteInfo& s) { return s.id == cfg.suite; })) {
    throw InvalidInput("unknown suite '" + cfg.suite + "'");
  }
  const SweepConfig c = resolved(cfg);
  if (c.jobs > 256) throw InvalidInput("jobs must be at most 256");
  if (c.samples < 0 || c.samples > 100000000) throw InvalidInput("samples out of range");
  if (c.suite == "prop3-exhaustive" && (c.n_max < 2 || c.n_max > 4 || c.k_max < 1 || c.k_max > 3)) {
    throw InvalidInput("prop3-exhaustive needs 2 <= n_max <= 4 and 1 <= k_max <= 3");
  }
  if ((c.suite == "good-arc-bounds" || c.suite == "good-arc-sets") &&
      (c.n_max < 2 || c.n_max > 8 || c.k_max < 1 || c.k_max > 6)) {
    throw InvalidInput("good-arc suites need 2 <= n_max <= 8 and 1 <= k_max <= 6");
  }
  if (c.suite == "selector-audit" && (c.n_max < 2 || c.n_max > 40 || c.k_max < 1 || c.k_max > c.n_max)) {
    throw InvalidInput("selector-audit needs 2 <= n_max <= 40 and 1 <= k_max <= n_max");
  }
  if (c.suite == "pg-end-to-end" || c.suite == "reversal") {
    const auto& planes = supported_plane_orders();
    if (std::find(planes.begin(), planes.end(), c.q) == planes.end()) throw InvalidInput("unsupported plane order");
  }
  if (c.suite == "pg-end-to-end" && (c.k_max < 1 || c.k_max > 60)) throw InvalidInput("k out of range");
  if (c.suite == "hypothesis-class-empty" && (c.n_max < 1 || c.n_max > 5 || c.k_max < 2)) {
    throw InvalidInput("hypothesis-class-empty needs 1 <= n_max <= 5 and k_max >= 2");
  }
  if (c.suite == "burr-tightness" && (c.k_max < 2 || c.k_max > 12)) throw InvalidInput("burr-tightness needs 2 <= k <= 12");
  if (c.suite == "differential" && (c.n_max < 2 || c.n_max > 14 || c.k_max < 1 || c.k_max > 7)) {
    throw InvalidInput("differential needs 2 <= n_max <= 14 and 1 <= k_max <= 7");
  }
  if (c.suite == "reversal" && (c.n_max < 2 || c.n_max > 40 || c.k_max < 1 || c.k_max > 12)) {
    throw InvalidInput("reversal needs 2 <= n_max <= 40 and 1 <= k_max <= 12");
  }
}

SweepReport run_sweep(const SweepConfig& cfg) {
  validate_config(cfg);
  const SweepConfig c = resolved(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  if (c.suite == "prop3-exhaustive") suite_prop3(c, tally);
  if (c.suite == "good-arc-bounds") suite_good_arc_bounds(c, tally);
  if (c.suite == "good-arc-sets") suite_good_arc_sets(c, tally);
  if (c.suite == "selector-audit") suite_selector(c, tally);
  if (c.suite == "pg-end-to-end") suite_pg(c, tally);
  if (c.suite == "hypothesis-class-empty") suite_empty_class(c, tally);
  if (c.suite == "burr-tightness") suite_burr(c, tally);
  if (c.suite == "differential") suite_differential(c, tally);
  if (c.suite == "reversal") suite_reversal(c, tally);

  SweepReport rep;
  rep.suite = c.suite;
  for (const auto& s : sweep_suites()) {
    if (s.id == c.suite) rep.criterion = s.criterion;
  }
  rep.instances = tally.instances;
  rep.failures = tally.failures;
  rep.failed_checkpoints = tally.failed_cp;
  rep.pass = tally.failures == 0 && tally.instances > 0;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.summary = c.suite + ": " + std::to_string(rep.instances) + " checks, " + std::to_string(rep.failures) +
                " failures, " + std::to_string(rep.failed_checkpoints) + " failed checkpoints";
  json buckets = json::object();
  for (const auto& [b, n] : tally.buckets) buckets[b] = n;
  json j = {{"schema", 1},
            {"suite", c.suite},
            {"criterion", rep.criterion},
            {"pass", rep.pass},
            {"instances", rep.instances},
            {"failures", rep.failures},
            {"failed_checkpoints", rep.failed_checkpoints},
            {"elapsed_ms", rep.elapsed_ms},
            {"config", {{"seed", c.seed}, {"jobs", c.jobs}, {"samples", c.samples}, {"n_max", c.n_max},
                        {"k_max", c.k_max}, {"q", c.q}}},
            {"buckets", buckets},
            {"details", tally.details},
            {"counterexamples", tally.rows}};
  rep.json = j.dump(2);
  if (!c.output.empty()) {
    std::ofstream out(c.output);
    if (!out) throw InvalidInput("cannot write report to " + c.output);
    out << rep.json << "\n";
  }
  return rep;
}

}  // namespace antiembed
