#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>

#include "errors.hpp"
#include "random.hpp"

namespace chromagraph {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge (" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ") out of range for n=" +
                                                   std::to_string(n));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.resize(static_cast<std::size_t>(n));
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw Error(ErrorCode::kLimit, "bitmask adjacency requires n <= 64");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    rows[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    rows[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  return rows;
}

EdgeOrdering::EdgeOrdering(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  std::vector<bool> seen(ranks_.size() + 1, false);
  for (int r : ranks_) {
    if (r < 1 || static_cast<std::size_t>(r) > ranks_.size() || seen[static_cast<std::size_t>(r)]) {
      throw Error(ErrorCode::kInvalidArgument, "edge ordering is not a bijection onto 1..|E|");
    }
    seen[static_cast<std::size_t>(r)] = true;
  }
}

EdgeOrdering EdgeOrdering::canonical(const Graph& g) {
  std::vector<int> r(g.size());
  std::iota(r.begin(), r.end(), 1);
  return EdgeOrdering(std::move(r));
}

EdgeOrdering EdgeOrdering::shuffled(const Graph& g, std::uint64_t seed) {
  std::vector<int> r(g.size());
  std::iota(r.begin(), r.end(), 1);
  Rng rng(seed);
  rng.shuffle(r);
  return EdgeOrdering(std::move(r));
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() >= 1 && components(g).size() == 1; }

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.n = g.order();
  s.m = g.size();
  for (int v = 0; v < s.n; ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
  // Each triangle {u<v<w} is found once from its lowest edge uv.
  for (const auto& e : g.edges()) {
    const auto& a = g.neighbors(e.u);
    const auto& b = g.neighbors(e.v);
    auto ia = std::upper_bound(a.begin(), a.end(), e.v);
    auto ib = std::upper_bound(b.begin(), b.end(), e.v);
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        ++s.triangles;
        ++ia;
        ++ib;
      }
    }
  }
  s.connected = is_connected(g);
  return s;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    int a = index[static_cast<std::size_t>(e.u)];
    int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), std::move(edges));
}

// --- graph6 -----------------------------------------------------------------

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

int graph6_value(std::string_view text, std::size_t offset) {
  if (offset >= text.size()) {
    throw ParseError("graph6: truncated input at byte " + std::to_string(offset), offset);
  }
  const auto c = static_cast<unsigned char>(text[offset]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: byte " + std::to_string(offset) + " out of range (value " +
                         std::to_string(c) + ")",
                     offset);
  }
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) pos = kGraph6Prefix.size();
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("graph6: eight-byte size header (n > 258047) is not supported", pos);
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | graph6_value(text, pos + static_cast<std::size_t>(i));
    if (n < 63) throw ParseError("graph6: long size header used for n < 63", pos);
    pos += 4;
  } else {
    n = graph6_value(text, pos);
    pos += 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) {
    throw ParseError("graph6: truncated bit field, expected " + std::to_string(bytes) +
                         " bytes after header, found " + std::to_string(text.size() - pos),
                     text.size());
  }
  if (text.size() - pos > bytes) {
    throw ParseError("graph6: trailing data at byte " + std::to_string(pos + bytes), pos + bytes);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = graph6_value(text, pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) edges.push_back({i, j});
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw Error(ErrorCode::kLimit, "graph6 encoding supports n <= 258047");
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

// --- edge list --------------------------------------------------------------

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long to_integer(std::string_view tok, std::size_t line_no) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": '" + std::string(tok) +
                         "' is not an integer",
                     line_no);
  }
  return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<long> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (!n) {
      if (toks.size() != 1) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": expected vertex count", line_no);
      }
      n = to_integer(toks[0], line_no);
      if (*n < 1 || *n > 1'000'000) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": vertex count must be positive", line_no);
      }
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'", line_no);
    }
    long u = to_integer(toks[0], line_no);
    long v = to_integer(toks[1], line_no);
    if (u == v) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u), line_no);
    }
    if (u < 0 || v < 0 || u >= *n || v >= *n) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex index out of range", line_no);
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (!n) throw ParseError("edge list: missing vertex count", line_no);
  return Graph(static_cast<int>(*n), std::move(edges));
}

// --- families ---------------------------------------------------------------

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "complete") return Family::kComplete;
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "star") return Family::kStar;
  if (name == "random_tree") return Family::kRandomTree;
  if (name == "random_connected") return Family::kRandomConnected;
  return std::nullopt;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::kComplete: return "complete";
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kStar: return "star";
    case Family::kRandomTree: return "random_tree";
    case Family::kRandomConnected: return "random_connected";
  }
  return "unknown";
}

namespace {

std::vector<Edge> random_tree_edges(int n, Rng& rng) {
  std::vector<Edge> edges;
  if (n <= 1) return edges;
  if (n == 2) return {{0, 1}};
  // Prufer decoding.
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.push_back({leaf, c});
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(c)];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back({a, v});
        break;
      }
    }
  }
  return edges;
}

}  // namespace

Graph generate_family(Family kind, int n, std::optional<std::uint64_t> seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "family order must be >= 1");
  std::vector<Edge> edges;
  switch (kind) {
    case Family::kComplete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      break;
    case Family::kPath:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Family::kCycle:
      if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle requires n >= 3");
      for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      break;
    case Family::kStar:
      for (int i = 1; i < n; ++i) edges.push_back({0, i});
      break;
    case Family::kRandomTree:
    case Family::kRandomConnected: {
      if (!seed) throw Error(ErrorCode::kInvalidArgument, "random families require a seed");
      Rng rng(*seed);
      edges = random_tree_edges(n, rng);
      if (kind == Family::kRandomConnected) {
        // Spanning tree plus every other pair independently with probability 1/2.
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (rng.coin()) edges.push_back({i, j});
      }
      break;
    }
  }
  return Graph(n, std::move(edges));
}

std::pair<Family, int> parse_family_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument, "family spec must be KIND:N, got '" + std::string(spec) + "'");
  }
  auto kind = family_from_string(spec.substr(0, colon));
  if (!kind) throw Error(ErrorCode::kInvalidArgument, "unknown family '" + std::string(spec.substr(0, colon)) + "'");
  auto num = spec.substr(colon + 1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc{} || ptr != num.data() + num.size() || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bad family order in '" + std::string(spec) + "'");
  }
  return {*kind, n};
}

// --- enumeration ------------------------------------------------------------

void for_each_labeled_connected(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxExhaustiveOrder) {
    throw Error(ErrorCode::kLimit, "exhaustive enumeration supports 1 <= n <= " +
                                       std::to_string(kMaxExhaustiveOrder));
  }
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  const std::uint32_t total = std::uint32_t{1} << pairs.size();
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1U) {
        rows[static_cast<std::size_t>(pairs[b].u)] |= 1U << pairs[b].v;
        rows[static_cast<std::size_t>(pairs[b].v)] |= 1U << pairs[b].u;
      }
    }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1U) next |= rows[static_cast<std::size_t>(v)];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (std::uint32_t{1} << n) - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1U) edges.push_back(pairs[b]);
    visit(Graph(n, std::move(edges)));
  }
}

std::vector<Graph> enumerate_labeled_connected(int n) {
  std::vector<Graph> out;
  for_each_labeled_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_labeled_trees(int n) {
  std::vector<Graph> out;
  for_each_labeled_connected(n, [&](const Graph& g) {
    if (g.size() == static_cast<std::size_t>(n - 1)) out.push_back(g);
  });
  return out;
}

}  // namespace chromagraph
