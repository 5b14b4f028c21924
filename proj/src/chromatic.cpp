#include "chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include <json.hpp>

#include "canonical.hpp"
#include "errors.hpp"

namespace chromagraph {

ChromPoly::ChromPoly(IntPoly p) : poly_(std::move(p)) {
  if (poly_.degree() < 1 || poly_.leading() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "chromatic polynomial must be monic of degree >= 1");
  }
}

IntPoly falling_factorial(int n) {
  IntPoly r = IntPoly::constant(1);
  for (int i = 0; i < n; ++i) r = r * IntPoly{mpz_class(-i), mpz_class(1)};
  return r;
}

namespace {

using Rows = std::vector<std::uint64_t>;

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::size_t edge_count(const Rows& rows) {
  std::size_t d = 0;
  for (auto r : rows) d += static_cast<std::size_t>(std::popcount(r));
  return d / 2;
}

Rows remove_vertex(const Rows& rows, std::size_t v) {
  Rows out;
  out.reserve(rows.size() - 1);
  const std::uint64_t low = bit(v) - 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == v) continue;
    std::uint64_t r = rows[i];
    out.push_back((r & low) | ((r >> 1) & ~low));
  }
  return out;
}

// Identifies v into u. For an edge uv this is contraction; for a non-edge it
// is the identification step of the addition form. Parallel edges collapse in
// the bitmask union.
Rows merge(Rows rows, std::size_t u, std::size_t v) {
  assert(!(rows[u] & bit(u)) && !(rows[v] & bit(v)));
  rows[u] = (rows[u] | rows[v]) & ~(bit(u) | bit(v));
  for (std::size_t w = 0; w < rows.size(); ++w) {
    if (w == u || w == v) continue;
    if (rows[w] & bit(v)) rows[w] = (rows[w] & ~bit(v)) | bit(u);
  }
  assert(!(rows[u] & bit(u)));
  return remove_vertex(rows, v);
}

std::vector<Rows> split_components(const Rows& rows) {
  const std::size_t n = rows.size();
  std::uint64_t unseen = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  std::vector<Rows> parts;
  while (unseen != 0) {
    std::uint64_t comp = bit(static_cast<std::size_t>(std::countr_zero(unseen)));
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    if (parts.empty() && unseen == 0) return {rows};
    std::vector<int> members;
    for (std::uint64_t c = comp; c != 0; c &= c - 1) members.push_back(std::countr_zero(c));
    Rows sub(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if (rows[static_cast<std::size_t>(members[i])] & bit(static_cast<std::size_t>(members[j]))) sub[i] |= bit(j);
    parts.push_back(std::move(sub));
  }
  return parts;
}

IntPoly x_power(std::size_t n) { return IntPoly::monomial(n); }

const IntPoly& x_minus_one() {
  static const IntPoly p{mpz_class(-1), mpz_class(1)};
  return p;
}

}  // namespace

ChromPoly ChromaticEngine::compute(const Graph& g) {
  if (g.order() < 1) throw Error(ErrorCode::kInvalidArgument, "graph must have at least one vertex");
  if (g.order() > 64) throw Error(ErrorCode::kLimit, "chromatic polynomial supports n <= 64");
  return ChromPoly(solve(g.adjacency_masks()));
}

IntPoly ChromaticEngine::solve(Rows rows) {
  const std::size_t n = rows.size();
  if (n == 0) return IntPoly::constant(1);
  const std::size_t m = edge_count(rows);
  if (m == 0) return x_power(n);

  auto parts = split_components(rows);
  if (parts.size() > 1) {
    IntPoly product = IntPoly::constant(1);
    for (auto& part : parts) product = product * solve(std::move(part));
    return product;
  }
  if (m == n - 1) return x_power(1) * pow(x_minus_one(), static_cast<unsigned>(n - 1));
  if (m == n * (n - 1) / 2) return falling_factorial(static_cast<int>(n));

  for (std::size_t v = 0; v < n; ++v) {
    if (std::popcount(rows[v]) == 1) return x_minus_one() * solve(remove_vertex(rows, v));
  }

  std::string key = canonical_key(rows, max_canonical_order_);
  if (auto it = cache_.find(key); it != cache_.end()) {
    ++hits_;
    return it->second;
  }

  IntPoly result;
  if (4 * m > n * (n - 1)) {
    // Addition form over the missing pair with the most common neighbours.
    std::size_t bu = 0, bv = 0;
    int best = -1;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rows[u] & bit(v)) continue;
        int common = std::popcount(rows[u] & rows[v]);
        if (common > best) {
          best = common;
          bu = u;
          bv = v;
        }
      }
    }
    Rows added = rows;
    added[bu] |= bit(bv);
    added[bv] |= bit(bu);
    result = solve(std::move(added)) + solve(merge(rows, bu, bv));
  } else {
    // Pivot on an edge in a triangle, else on an edge at a maximum-degree vertex.
    std::size_t bu = n, bv = n;
    for (std::size_t u = 0; u < n && bu == n; ++u) {
      for (std::uint64_t r = rows[u] & (u == 63 ? 0 : ~(bit(u + 1) - 1)); r != 0; r &= r - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(r));
        if (rows[u] & rows[v]) {
          bu = u;
          bv = v;
          break;
        }
      }
    }
    if (bu == n) {
      std::size_t hub = 0;
      for (std::size_t v = 1; v < n; ++v)
        if (std::popcount(rows[v]) > std::popcount(rows[hub])) hub = v;
      bu = hub;
      bv = static_cast<std::size_t>(std::countr_zero(rows[hub]));
    }
    Rows deleted = rows;
    deleted[bu] &= ~bit(bv);
    deleted[bv] &= ~bit(bu);
    result = solve(std::move(deleted)) - solve(merge(rows, bu, bv));
  }
  cache_.emplace(std::move(key), result);
  return result;
}

ChromPoly chromatic_polynomial(const Graph& g) {
  ChromaticEngine engine;
  return engine.compute(g);
}

// --- subset expansion -------------------------------------------------------

namespace {

struct DisjointSets {
  std::vector<int> parent;
  int sets;

  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)), sets(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    --sets;
    return true;
  }
};

}  // namespace

int spanning_components(const Graph& g, std::uint64_t subset) {
  DisjointSets ds(g.order());
  const auto& edges = g.edges();
  for (std::uint64_t s = subset; s != 0; s &= s - 1) {
    const auto& e = edges[static_cast<std::size_t>(std::countr_zero(s))];
    ds.unite(e.u, e.v);
  }
  return ds.sets;
}

ChromPoly subset_expansion(const Graph& g) {
  if (g.order() < 1) throw Error(ErrorCode::kInvalidArgument, "graph must have at least one vertex");
  if (g.size() > kMaxSubsetEdges) {
    throw Error(ErrorCode::kLimit, "subset expansion limited to |E| <= " + std::to_string(kMaxSubsetEdges));
  }
  std::vector<long long> coeff(static_cast<std::size_t>(g.order()) + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    const int kappa = spanning_components(g, s);
    coeff[static_cast<std::size_t>(kappa)] += (std::popcount(s) & 1) ? -1 : 1;
  }
  std::vector<mpz_class> c;
  for (long long v : coeff) c.emplace_back(static_cast<long>(v));
  return ChromPoly(IntPoly(std::move(c)));
}

// --- brute-force colouring count ---------------------------------------------

mpz_class count_colorings(const Graph& g, unsigned colors) {
  const int n = g.order();
  if (n == 0) return 1;
  if (colors == 0) return 0;
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), colors, static_cast<unsigned long>(n));
  if (space > kColoringGuard) {
    throw Error(ErrorCode::kLimit, "count_colorings: colors^n exceeds " + std::to_string(kColoringGuard));
  }
  std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) earlier[static_cast<std::size_t>(e.v)].push_back(e.u);

  std::vector<unsigned> color(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  // Iterative depth-first search over colour assignments in vertex order.
  int v = 0;
  color[0] = 0;
  while (v >= 0) {
    auto& c = color[static_cast<std::size_t>(v)];
    if (c >= colors) {
      --v;
      if (v >= 0) ++color[static_cast<std::size_t>(v)];
      continue;
    }
    bool ok = true;
    for (int u : earlier[static_cast<std::size_t>(v)]) {
      if (color[static_cast<std::size_t>(u)] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++c;
    } else if (v == n - 1) {
      ++count;
      ++c;
    } else {
      ++v;
      color[static_cast<std::size_t>(v)] = 0;
    }
  }
  return mpz_class(static_cast<unsigned long>(count));
}

// --- Whitney coefficients -----------------------------------------------------

WhitneyCoeffs broken_cycle_coeffs(const Graph& g, const EdgeOrdering& ordering) {
  const std::size_t m = g.size();
  if (ordering.size() != m) {
    throw Error(ErrorCode::kInvalidArgument, "edge ordering size does not match |E|");
  }
  if (m > kMaxSubsetEdges) {
    throw Error(ErrorCode::kLimit, "broken-cycle enumeration limited to |E| <= " + std::to_string(kMaxSubsetEdges));
  }
  const int n = g.order();
  std::vector<std::size_t> by_rank_desc(m);
  std::iota(by_rank_desc.begin(), by_rank_desc.end(), 0);
  std::sort(by_rank_desc.begin(), by_rank_desc.end(),
            [&](std::size_t a, std::size_t b) { return ordering.rank(a) > ordering.rank(b); });

  std::vector<std::uint64_t> count(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t s = 0; s < total; ++s) {
    // S contains a broken cycle iff some edge e has its endpoints joined by
    // edges of S that all outrank e.
    DisjointSets ds(n);
    bool free = true;
    for (std::size_t idx : by_rank_desc) {
      const auto& e = g.edges()[idx];
      if (ds.find(e.u) == ds.find(e.v)) {
        free = false;
        break;
      }
      if (s >> idx & 1U) ds.unite(e.u, e.v);
    }
    if (free) ++count[static_cast<std::size_t>(n - std::popcount(s))];
  }
  WhitneyCoeffs w;
  for (auto c : count) w.a.emplace_back(static_cast<unsigned long>(c));
  return w;
}

WhitneyCoeffs whitney_from_poly(const ChromPoly& p) {
  const int n = p.order();
  WhitneyCoeffs w;
  w.a.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    mpz_class c = p.poly().coeff(static_cast<std::size_t>(i));
    if ((n - i) % 2 != 0) c = -c;
    if (c < 0) {
      throw Error(ErrorCode::kInternal, "coefficient of x^" + std::to_string(i) + " violates sign alternation");
    }
    w.a[static_cast<std::size_t>(i)] = c;
  }
  return w;
}

int chromatic_number(const ChromPoly& p) {
  for (int x = 1;; ++x) {
    if (sign_at(p.poly(), mpz_class(x), mpz_class(1)) != 0) return x;
  }
}

int chromatic_number(const Graph& g) { return chromatic_number(chromatic_polynomial(g)); }

// --- serialisation --------------------------------------------------------------

std::string poly_to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  if (p.is_zero()) arr.push_back("0");
  return arr.dump();
}

IntPoly poly_from_json(std::string_view json) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what(), e.byte);
  }
  if (!arr.is_array()) throw ParseError("polynomial JSON must be an array", 0);
  std::vector<mpz_class> c;
  for (const auto& v : arr) {
    if (!v.is_string()) throw ParseError("polynomial JSON entries must be decimal strings", 0);
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw ParseError("bad coefficient '" + v.get<std::string>() + "'", 0);
    c.push_back(z);
  }
  return IntPoly(std::move(c));
}

}  // namespace chromagraph
