#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chromagraph {

// Canonical labeling of small graphs given as adjacency bitmasks.
//
// Vertices are first split by equitable refinement (starting from degree
// classes), then every individualisation path is explored and the smallest
// relabelled adjacency matrix wins. Returns nullopt when the search tree
// exceeds leaf_budget; callers fall back to a labeled key.
std::optional<std::vector<int>> canonical_order(const std::vector<std::uint64_t>& rows,
                                                std::size_t leaf_budget = 4096);

// Adjacency rows permuted so that new vertex i is old vertex order[i].
std::vector<std::uint64_t> relabel(const std::vector<std::uint64_t>& rows,
                                   const std::vector<int>& order);

// Memo key. Canonical and labeled keys carry different tags and never collide.
std::string canonical_key(const std::vector<std::uint64_t>& rows, std::size_t max_canonical_order = 12);

}  // namespace chromagraph
