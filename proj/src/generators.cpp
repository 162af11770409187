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

#include "antiembed/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "antiembed/errors.hpp"

namespace antiembed {

Digraph gen_burr(int k) {
  if (k < 2) throw InvalidInput("gen_burr needs k >= 2");
  const int m = 2 * k - 2;
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int t = 0; t < m; ++t) {
      const VertexId a = i;
      const VertexId b = m + (i + t) % m;
      if (t >= 1 && t <= k - 1) arcs.push_back({a, b});
      else arcs.push_back({b, a});
    }
  }
  return Digraph(2 * m, arcs);
}

namespace {

struct PrimePowerSpec {
  int q, p, e;
  std::array<int, 4> low;  // monic irreducible x^e + low[e-1] x^{e-1} + ... + low[0]
};

// Irreducible polynomials: x^2+x+1, x^3+x+1, x^2+1 over F_3, x^4+x+1, x^2+2 over F_5.
constexpr PrimePowerSpec kFields[] = {
    {2, 2, 1, {0}},           {3, 3, 1, {0}},  {4, 2, 2, {1, 1}},     {5, 5, 1, {0}},
    {7, 7, 1, {0}},           {8, 2, 3, {1, 1, 0}}, {9, 3, 2, {1, 0}}, {11, 11, 1, {0}},
    {13, 13, 1, {0}},         {16, 2, 4, {1, 1, 0, 0}}, {17, 17, 1, {0}}, {19, 19, 1, {0}},
    {23, 23, 1, {0}},         {25, 5, 2, {2, 0}},
};

// Elements are integers whose base-p digits are polynomial coefficients.
struct FieldTables {
  int q = 0;
  std::vector<int> add, mul;
  int plus(int a, int b) const { return add[a * q + b]; }
  int times(int a, int b) const { return mul[a * q + b]; }
};

FieldTables build_field(const PrimePowerSpec& f) {
  const int q = f.q, p = f.p, e = f.e;
  auto digits = [&](int a) {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i, a /= p) d[i] = a % p;
    return d;
  };
  auto number = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = e - 1; i >= 0; --i) a = a * p + d[i];
    return a;
  };
  FieldTables ft;
  ft.q = q;
  ft.add.resize(q * q);
  ft.mul.resize(q * q);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<int> s(e);
      for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
      ft.add[a * q + b] = number(s);
      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      // Reduce with x^e = -(low[0] + low[1] x + ...).
      for (int deg = 2 * e - 2; deg >= e; --deg) {
        const int c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (int i = 0; i < e; ++i) {
          prod[deg - e + i] = ((prod[deg - e + i] - c * f.low[i]) % p + p) % p;
        }
      }
      prod.resize(e);
      ft.mul[a * q + b] = number(prod);
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (ft.times(a, b) == 0) throw InternalAssertion("field-table", "zero divisor in GF(" + std::to_string(q) + ")");
    }
  }
  return ft;
}

const PrimePowerSpec& field_spec(int q) {
  for (const auto& f : kFields) {
    if (f.q == q) return f;
  }
  throw InvalidInput("gen_incidence: unsupported plane order " + std::to_string(q));
}

}  // namespace

const std::vector<int>& supported_plane_orders() {
  static const std::vector<int> qs = [] {
    std::vector<int> v;
    for (const auto& f : kFields) v.push_back(f.q);
    return v;
  }();
  return qs;
}

Digraph gen_incidence(int q) {
  const FieldTables F = build_field(field_spec(q));
  // Projective points as triples whose first non-zero coordinate is 1.
  std::vector<std::array<int, 3>> pts;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) pts.push_back({x, y, z});
      }
    }
  }
  const int N = static_cast<int>(pts.size());
  if (N != q * q + q + 1) throw InternalAssertion("plane-count", "wrong number of projective points");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(N) * (q + 1));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const int dot = F.plus(F.plus(F.times(pts[i][0], pts[j][0]), F.times(pts[i][1], pts[j][1])),
                             F.times(pts[i][2], pts[j][2]));
      if (dot == 0) arcs.push_back({i, N + j});
    }
  }
  return Digraph(2 * N, arcs);
}

std::string audit_projective_plane(const Digraph& d, int q) {
  const int N = q * q + q + 1;
  if (d.order() != 2 * N) return "order is not 2(q^2+q+1)";
  if (d.size() != (q + 1) * N) return "size is not (q+1)(q^2+q+1)";
  for (const Arc& a : d.arcs()) {
    if (a.tail >= N || a.head < N) return "arc not from a point to a line";
  }
  for (VertexId a = 0; a < N; ++a) {
    for (VertexId b = a + 1; b < N; ++b) {
      if (d.out_set(a).and_count(d.out_set(b)) != 1) {
        return "points " + std::to_string(a) + " and " + std::to_string(b) + " do not share exactly one line";
      }
      if (d.in_set(N + a).and_count(d.in_set(N + b)) != 1) {
        return "lines " + std::to_string(N + a) + " and " + std::to_string(N + b) + " do not meet exactly once";
      }
    }
  }
  return {};
}

Digraph gen_random_arcs(int n, int m, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("gen_random_arcs needs n >= 1");
  const long total = static_cast<long>(n) * (n - 1);
  if (m < 0 || m > total) throw InvalidInput("gen_random_arcs: infeasible arc count");
  std::vector<int> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<long> pick(i, total - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  std::sort(idx.begin(), idx.begin() + m);
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (int i = 0; i < m; ++i) {
    const VertexId u = idx[i] / (n - 1);
    const int r = idx[i] % (n - 1);
    arcs.push_back({u, r < u ? r : r + 1});
  }
  return Digraph(n, arcs);
}

Digraph gen_random_dense(int n, int k, std::uint64_t seed) {
  if (k < 1 || n < k) throw InvalidInput("gen_random_dense needs n >= k >= 1");
  const long m = static_cast<long>(k - 1) * n + 1;
  if (m > static_cast<long>(n) * (n - 1)) throw InvalidInput("gen_random_dense: (k-1)n+1 arcs do not fit");
  return gen_random_arcs(n, static_cast<int>(m), seed);
}

namespace {

// Orients a tree given by parent pointers, with a random sign at vertex 0 and
// a random relabelling.
AntiTree orient(const std::vector<int>& parent, std::mt19937_64& rng) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> depth(n, 0);
  for (int i = 1; i < n; ++i) depth[i] = depth[parent[i]] + 1;
  const int flip = static_cast<int>(rng() & 1U);
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Arc> arcs;
  for (int i = 1; i < n; ++i) {
    const bool child_plus = (depth[i] + flip) % 2 == 0;
    const VertexId c = label[i], p = label[parent[i]];
    arcs.push_back(child_plus ? Arc{c, p} : Arc{p, c});
  }
  return validate_antitree(Digraph(n, arcs));
}

}  // namespace

AntiTree random_antitree(int k, std::uint64_t seed, double hub_bias) {
  if (k < 1) throw InvalidInput("random_antitree needs k >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution hub(std::clamp(hub_bias, 0.0, 1.0));
  std::vector<int> parent(k + 1, -1);
  for (int i = 1; i <= k; ++i) {
    parent[i] = hub(rng) ? 0 : std::uniform_int_distribution<int>(0, i - 1)(rng);
  }
  return orient(parent, rng);
}

AntiTree random_two_hub_antitree(int k, std::uint64_t seed, double hub_share) {
  if (k < 1) throw InvalidInput("random_two_hub_antitree needs k >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> parent(k + 1, -1);
  if (k == 1) {
    parent[1] = 0;
    return orient(parent, rng);
  }
  // Vertices 1..gap form a path from hub 0 to the second hub gap+1.
  const int gap = std::min(k - 1, std::uniform_int_distribution<int>(0, 2)(rng));
  for (int i = 1; i <= gap + 1; ++i) parent[i] = i - 1;
  const int second = gap + 1;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double share = std::clamp(hub_share, 0.0, 1.0);
  for (int i = second + 1; i <= k; ++i) {
    const double x = coin(rng);
    if (x < share / 2) {
      parent[i] = 0;
    } else if (x < share) {
      parent[i] = second;
    } else {
      parent[i] = std::uniform_int_distribution<int>(0, i - 1)(rng);
    }
  }
  return orient(parent, rng);
}

AntiTree random_caterpillar(int k, std::uint64_t seed) {
  if (k < 1) throw InvalidInput("random_caterpillar needs k >= 1");
  std::mt19937_64 rng(seed);
  const int L = k == 1 ? 1 : std::uniform_int_distribution<int>(2, k)(rng);
  std::vector<int> parent(L + 1, -1);
  for (int i = 1; i <= L; ++i) parent[i] = i - 1;
  for (int leaf = 0; leaf < k - L; ++leaf) {
    parent.push_back(std::uniform_int_distribution<int>(1, L - 1)(rng));
  }
  return orient(parent, rng);
}

}  // namespace antiembed
