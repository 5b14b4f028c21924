#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graph.hpp"
#include "polynomial.hpp"

namespace chromagraph {

/// Chromatic polynomial of a graph on n >= 1 vertices: a monic integer
/// polynomial of degree n.
class ChromPoly {
 public:
  // Throws kInvalidArgument unless p is monic of degree >= 1.
  explicit ChromPoly(IntPoly p);

  const IntPoly& poly() const { return poly_; }
  const std::vector<mpz_class>& coeffs() const { return poly_.coeffs(); }
  int order() const { return static_cast<int>(poly_.degree()); }

  mpq_class operator()(const mpq_class& x) const { return poly_(x); }

  friend bool operator==(const ChromPoly& a, const ChromPoly& b) { return a.poly_ == b.poly_; }

 private:
  IntPoly poly_;
};

/// a[i] for i = 1..n is the number of broken-cycle-free spanning subgraphs
/// with n - i edges; a[0] is always 0.
struct WhitneyCoeffs {
  std::vector<mpz_class> a;

  int order() const { return static_cast<int>(a.size()) - 1; }
  friend bool operator==(const WhitneyCoeffs&, const WhitneyCoeffs&) = default;
};

// x(x-1)...(x-n+1)
IntPoly falling_factorial(int n);

/// Deletion-contraction with memoisation on canonical forms.
///
/// Sparse graphs are reduced with P(G) = P(G-e) - P(G/e); dense ones
/// (m > n(n-1)/4) with the addition form P(G) = P(G+e) + P(G/e) over a
/// missing edge. Components, trees, complete graphs and pendant vertices are
/// closed forms. The cache belongs to the engine instance, so an engine is not
/// shared between threads.
class ChromaticEngine {
 public:
  explicit ChromaticEngine(std::size_t max_canonical_order = 12)
      : max_canonical_order_(max_canonical_order) {}

  ChromPoly compute(const Graph& g);

  std::size_t cache_size() const { return cache_.size(); }
  std::size_t cache_hits() const { return hits_; }

 private:
  IntPoly solve(std::vector<std::uint64_t> rows);

  std::size_t max_canonical_order_;
  std::unordered_map<std::string, IntPoly> cache_;
  std::size_t hits_ = 0;
};

ChromPoly chromatic_polynomial(const Graph& g);

inline constexpr std::size_t kMaxSubsetEdges = 24;

// Sum over spanning edge subsets of (-1)^|E'| x^components(E').
ChromPoly subset_expansion(const Graph& g);

// Connected components of the spanning subgraph (V, subset), where subset is
// a bitmask over g.edges().
int spanning_components(const Graph& g, std::uint64_t subset);

inline constexpr std::uint64_t kColoringGuard = 100'000'000;

// Number of proper colourings with `colors` colours, by exhaustive search.
mpz_class count_colorings(const Graph& g, unsigned colors);

WhitneyCoeffs broken_cycle_coeffs(const Graph& g, const EdgeOrdering& ordering);
WhitneyCoeffs whitney_from_poly(const ChromPoly& p);

int chromatic_number(const Graph& g);
int chromatic_number(const ChromPoly& p);

// JSON array of decimal coefficient strings, lowest power first.
std::string poly_to_json(const IntPoly& p);
IntPoly poly_from_json(std::string_view json);

}  // namespace chromagraph
