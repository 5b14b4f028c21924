#pragma once

// Slow, independent reference computations used only by the tests.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "graph.hpp"
#include "polynomial.hpp"

namespace oracle {

using chromagraph::Edge;
using chromagraph::Graph;
using chromagraph::IntPoly;

inline int find(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

inline bool connected_subset(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  int parts = n;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (((mask >> i) & 1U) == 0) continue;
    int a = find(parent, pairs[i].u);
    int b = find(parent, pairs[i].v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

// Labeled connected graphs on n vertices by filtering all edge subsets.
inline std::size_t count_connected_by_subsets(int n) {
  const auto pairs = all_pairs(n);
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask)
    if (connected_subset(n, pairs, mask)) ++count;
  return count;
}

inline std::uint64_t triangles(const Graph& g) {
  std::uint64_t t = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++t;
  return t;
}

inline IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly p{mpz_class(1)};
  for (long r : roots) p = p * IntPoly{mpz_class(-r), mpz_class(1)};
  return p;
}

// Taylor coefficients of p around x0: q_j = p^(j)(x0) / j!.
inline std::vector<mpq_class> taylor(const IntPoly& p, const mpq_class& x0) {
  std::vector<mpq_class> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  const std::size_t d = c.size();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = d - 1; i > j; --i) c[i - 1] += x0 * c[i];
  return c;
}

// k-th derivative of ln p at x0 from the power series of log(p(x0 + h)).
inline mpq_class log_derivative(const IntPoly& p, int k, const mpq_class& x0) {
  auto q = taylor(p, x0);
  q.resize(static_cast<std::size_t>(k) + 1, mpq_class(0));
  std::vector<mpq_class> l(static_cast<std::size_t>(k) + 1, mpq_class(0));
  for (int i = 1; i <= k; ++i) {
    mpq_class s = i * q[i];
    for (int j = 1; j < i; ++j) s -= j * l[j] * q[i - j];
    l[i] = s / (i * q[0]);
  }
  mpz_class fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return l[k] * fact;
}

// Sum over real roots of (-1)^(k-1) (k-1)! / (x - r)^k for split polynomials.
inline mpq_class split_log_derivative(const std::vector<long>& roots, int k, const mpq_class& x) {
  mpz_class fact = 1;
  for (int i = 2; i < k; ++i) fact *= i;
  mpq_class total = 0;
  for (long r : roots) {
    mpq_class d = x - r;
    mpq_class term = 1;
    for (int i = 0; i < k; ++i) term /= d;
    total += term;
  }
  return (k % 2 == 1 ? 1 : -1) * fact * total;
}

// Edge sets of every simple cycle, as bitmasks over g.edges().
inline std::set<std::uint64_t> cycles(const Graph& g) {
  const int n = g.order();
  const auto& edges = g.edges();
  auto edge_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].u == a && edges[i].v == b) return i;
    return edges.size();
  };
  std::set<std::uint64_t> out;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  // Paths start at their least vertex.
  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int w : g.neighbors(v)) {
      if (w == start && path.size() >= 3) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) mask |= std::uint64_t{1} << edge_index(path[i], path[i + 1]);
        mask |= std::uint64_t{1} << edge_index(v, start);
        out.insert(mask);
      } else if (w > start && !used[w]) {
        used[w] = true;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        used[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    path = {s};
    dfs(dfs, s, s);
    used[s] = false;
  }
  return out;
}

// a[i] = number of edge subsets of size n - i containing no broken cycle,
// where a broken cycle is a cycle minus its lowest-ranked edge.
inline std::vector<mpz_class> broken_cycle_free_counts(const Graph& g, const std::vector<int>& ranks) {
  std::vector<std::uint64_t> broken;
  for (std::uint64_t c : cycles(g)) {
    int low = -1;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (((c >> i) & 1U) != 0 && (low < 0 || ranks[i] < ranks[static_cast<std::size_t>(low)])) low = static_cast<int>(i);
    broken.push_back(c & ~(std::uint64_t{1} << low));
  }
  const int n = g.order();
  std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
    bool ok = true;
    for (std::uint64_t b : broken)
      if ((s & b) == b) {
        ok = false;
        break;
      }
    if (!ok) continue;
    const int size = __builtin_popcountll(s);
    if (size < n) a[static_cast<std::size_t>(n - size)] += 1;
  }
  return a;
}

// Decodes a Prufer sequence over vertices 0..n-1 into a labeled tree.
inline Graph prufer_tree(int n, const std::vector<int>& code) {
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, c});
    --degree[leaf];
    --degree[c];
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back({a, v});
      }
    }
  return Graph(n, edges);
}

// Every labeled tree on n >= 2 vertices, one per Prufer sequence.
template <class F>
void for_each_tree(int n, F&& visit) {
  if (n == 2) {
    visit(Graph(2, {{0, 1}}));
    return;
  }
  std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    visit(prufer_tree(n, code));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) return;
  }
}

// Random connected graph: random spanning tree plus each other pair with probability p.
inline Graph random_connected(std::mt19937_64& rng, int n, double p = 0.4) {
  std::vector<Edge> edges;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.push_back({perm[i], perm[pick(rng)]});
  }
  std::bernoulli_distribution extra(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (extra(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace oracle
