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

#include "antiembed/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace antiembed {

VertexSet::VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

bool VertexSet::empty() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
}

int VertexSet::count() const {
  int c = 0;
  for (auto x : w_) c += __builtin_popcountll(x);
  return c;
}

int VertexSet::and_count(const VertexSet& other) const {
  int c = 0;
  const std::size_t m = std::min(w_.size(), other.w_.size());
  for (std::size_t i = 0; i < m; ++i) c += __builtin_popcountll(w_[i] & other.w_[i]);
  return c;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= i < o.w_.size() ? o.w_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

Digraph::Digraph(int n) : Digraph(n, std::span<const Arc>{}) {}

Digraph::Digraph(int n, std::initializer_list<Arc> arcs)
    : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

Digraph::Digraph(int n, std::span<const Arc> arcs) : n_(n) {
  if (n < 0) throw InvalidInput("negative order");
  out_adj_.resize(n);
  in_adj_.resize(n);
  out_bits_.assign(n, VertexSet(n));
  in_bits_.assign(n, VertexSet(n));
  arcs_.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw InvalidInput("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                         ") out of range for order " + std::to_string(n));
    }
    if (a.tail == a.head) throw InvalidInput("loop at vertex " + std::to_string(a.tail));
    if (out_bits_[a.tail].contains(a.head)) {
      throw InvalidInput("duplicate arc (" + std::to_string(a.tail) + "," +
                         std::to_string(a.head) + ")");
    }
    out_bits_[a.tail].insert(a.head);
    in_bits_[a.head].insert(a.tail);
    out_adj_[a.tail].push_back(a.head);
    in_adj_[a.head].push_back(a.tail);
    arcs_.push_back(a);
  }
  out_sorted_ = out_adj_;
  in_sorted_ = in_adj_;
  for (auto& l : out_sorted_) std::sort(l.begin(), l.end());
  for (auto& l : in_sorted_) std::sort(l.begin(), l.end());
}

bool Digraph::operator==(const Digraph& o) const {
  if (n_ != o.n_ || arcs_.size() != o.arcs_.size()) return false;
  for (VertexId v = 0; v < n_; ++v) {
    if (out_bits_[v] != o.out_bits_[v]) return false;
  }
  return true;
}

int pseudo_degree(const Digraph& d, Sign s) {
  int best = 0;
  for (VertexId v = 0; v < d.order(); ++v) {
    const int x = d.degree(v, s);
    if (x > 0 && (best == 0 || x < best)) best = x;
  }
  return best;
}

DegreeProfile degree_profile(const Digraph& d) {
  DegreeProfile p;
  const int n = d.order();
  p.out_deg.resize(n);
  p.in_deg.resize(n);
  p.min_out = n == 0 ? 0 : std::numeric_limits<int>::max();
  p.min_in = p.min_out;
  for (VertexId v = 0; v < n; ++v) {
    p.out_deg[v] = d.out_degree(v);
    p.in_deg[v] = d.in_degree(v);
    p.max_out = std::max(p.max_out, p.out_deg[v]);
    p.max_in = std::max(p.max_in, p.in_deg[v]);
    p.min_out = std::min(p.min_out, p.out_deg[v]);
    p.min_in = std::min(p.min_in, p.in_deg[v]);
  }
  p.delta_plus_bar = pseudo_degree(d, Sign::Plus);
  p.delta_minus_bar = pseudo_degree(d, Sign::Minus);
  p.delta0_bar = std::min(p.delta_plus_bar, p.delta_minus_bar);
  return p;
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> plus_minus_sets(const Digraph& d) {
  std::vector<VertexId> plus, minus;
  for (VertexId v = 0; v < d.order(); ++v) {
    if (d.out_degree(v) > 0) plus.push_back(v);
    if (d.in_degree(v) > 0) minus.push_back(v);
  }
  return {plus, minus};
}

Digraph reverse(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back(reversed(a));
  return Digraph(d.order(), arcs);
}

Subdigraph induced_subdigraph(const Digraph& d, std::span<const Arc> keep_arcs,
                              bool drop_isolated) {
  for (const Arc& a : keep_arcs) {
    if (!d.contains_vertex(a.tail) || !d.contains_vertex(a.head) || !d.has_arc(a.tail, a.head)) {
      throw InvalidInput("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                         ") is not an arc of the digraph");
    }
  }
  Subdigraph out;
  const int n = d.order();
  if (!drop_isolated) {
    out.graph = Digraph(n, keep_arcs);
    out.new_to_old.resize(n);
    out.old_to_new.resize(n);
    for (VertexId v = 0; v < n; ++v) out.new_to_old[v] = out.old_to_new[v] = v;
    return out;
  }
  std::vector<char> used(n, 0);
  for (const Arc& a : keep_arcs) used[a.tail] = used[a.head] = 1;
  out.old_to_new.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (used[v]) {
      out.old_to_new[v] = static_cast<VertexId>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<Arc> arcs;
  arcs.reserve(keep_arcs.size());
  for (const Arc& a : keep_arcs) arcs.push_back({out.old_to_new[a.tail], out.old_to_new[a.head]});
  out.graph = Digraph(static_cast<int>(out.new_to_old.size()), arcs);
  return out;
}

Digraph with_arcs(const Digraph& d, std::span<const Arc> extra) {
  std::vector<Arc> arcs = d.arcs();
  arcs.insert(arcs.end(), extra.begin(), extra.end());
  return Digraph(d.order(), arcs);
}

namespace {

GraphFile parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad JSON graph: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs")) {
    throw InvalidInput("JSON graph needs fields \"n\" and \"arcs\"");
  }
  GraphFile g;
  std::vector<Arc> arcs;
  try {
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw InvalidInput("arc entries must be [u, v]");
      arcs.push_back({a[0].get<VertexId>(), a[1].get<VertexId>()});
    }
    g.graph = Digraph(j.at("n").get<int>(), arcs);
    if (j.contains("root") && !j.at("root").is_null()) g.root = j.at("root").get<VertexId>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad JSON graph: ") + e.what());
  }
  return g;
}

GraphFile parse_arc_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  int n = 0;
  long m = 0;
  std::optional<VertexId> root;
  std::vector<Arc> arcs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!header) {
      if (!(ls >> n >> m)) throw InvalidInput("line " + std::to_string(lineno) + ": expected 'n m'");
      std::string tok;
      if (ls >> tok) {
        VertexId r = 0;
        if (tok != "root" || !(ls >> r)) {
          throw InvalidInput("line " + std::to_string(lineno) + ": unexpected token '" + tok + "'");
        }
        root = r;
      }
      header = true;
      continue;
    }
    VertexId u = 0, v = 0;
    if (!(ls >> u >> v)) throw InvalidInput("line " + std::to_string(lineno) + ": expected 'u v'");
    arcs.push_back({u, v});
  }
  if (!header) throw InvalidInput("empty graph file");
  if (static_cast<long>(arcs.size()) != m) {
    throw InvalidInput("header announces " + std::to_string(m) + " arcs, found " +
                       std::to_string(arcs.size()));
  }
  return GraphFile{Digraph(n, arcs), root};
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_arc_list(text);
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string to_arc_list(const Digraph& d, std::optional<VertexId> root) {
  std::ostringstream out;
  out << d.order() << ' ' << d.size();
  if (root) out << " root " << *root;
  out << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string to_json_text(const Digraph& d) {
  nlohmann::json j;
  j["n"] = d.order();
  j["arcs"] = nlohmann::json::array();
  for (const Arc& a : d.arcs()) j["arcs"].push_back({a.tail, a.head});
  return j.dump();
}

std::string to_dot(const Digraph& d, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (VertexId v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace antiembed
