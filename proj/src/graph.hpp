#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chromagraph {

struct Edge {
  int u;
  int v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; edges
/// are stored normalised (u < v) in lexicographic order, which is also the
/// canonical edge ordering used for broken cycles.
class Graph {
 public:
  // Normalises each pair and drops duplicates. Throws on loops or
  // out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  // Adjacency rows as bitmasks. Only valid for n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Bijection from edge index (position in Graph::edges()) to a rank 1..|E|.
class EdgeOrdering {
 public:
  // Throws kInvalidArgument if ranks is not a permutation of 1..ranks.size().
  explicit EdgeOrdering(std::vector<int> ranks);

  static EdgeOrdering canonical(const Graph& g);
  // Deterministic random permutation for a given seed.
  static EdgeOrdering shuffled(const Graph& g, std::uint64_t seed);

  const std::vector<int>& ranks() const { return ranks_; }
  int rank(std::size_t edge_index) const { return ranks_[edge_index]; }
  std::size_t size() const { return ranks_.size(); }

 private:
  std::vector<int> ranks_;
};

struct GraphStats {
  int n = 0;
  std::size_t m = 0;
  int max_degree = 0;
  std::uint64_t triangles = 0;
  bool connected = false;
};

GraphStats stats(const Graph& g);
bool is_connected(const Graph& g);
// Vertex sets of the connected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> components(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph disjoint_union(const Graph& a, const Graph& b);

// graph6 support. Decoding handles the one- and four-byte size headers
// (n <= 258047); an optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// "n" on the first line, then one "u v" pair per line. Blank lines and
// lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

enum class Family { kComplete, kPath, kCycle, kStar, kRandomTree, kRandomConnected };

std::optional<Family> family_from_string(std::string_view name);
std::string to_string(Family f);

Graph generate_family(Family kind, int n, std::optional<std::uint64_t> seed = std::nullopt);

// "KIND:N", e.g. "cycle:5" or "random_tree:8".
std::pair<Family, int> parse_family_spec(std::string_view spec);

inline constexpr int kMaxExhaustiveOrder = 6;

// Calls visit once for every labeled simple connected graph on n vertices,
// in increasing order of the upper-triangle edge bitmask.
void for_each_labeled_connected(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_labeled_connected(int n);

// Labeled trees on n vertices (a subset of the above, same order).
std::vector<Graph> enumerate_labeled_trees(int n);

}  // namespace chromagraph
