#include "canonical.hpp"

#include <algorithm>
#include <bit>

namespace chromagraph {
namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t cell_mask(const std::vector<int>& cell) {
  std::uint64_t m = 0;
  for (int v : cell) m |= std::uint64_t{1} << v;
  return m;
}

// Splits cells until every vertex in a cell has the same number of
// neighbours in every other cell. Split pieces are ordered by that count.
void refine(const std::vector<std::uint64_t>& rows, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const std::uint64_t splitter = cell_mask(cells[w]);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto& cell = cells[c];
        if (cell.size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(std::popcount(rows[static_cast<std::size_t>(v)] & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (keyed.front().first == keyed.back().first) continue;
        Cells pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<long>(c));
        cells.insert(cells.begin() + static_cast<long>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

struct Search {
  const std::vector<std::uint64_t>& rows;
  std::size_t budget;
  std::size_t leaves = 0;
  bool aborted = false;
  std::vector<std::uint64_t> best_cert;
  std::vector<int> best_order;

  void run(Cells cells) {
    if (aborted) return;
    refine(rows, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) {
        target = i;
      }
    }
    if (target == cells.size()) {
      if (++leaves > budget) {
        aborted = true;
        return;
      }
      std::vector<int> order;
      for (const auto& c : cells) order.push_back(c.front());
      auto cert = relabel(rows, order);
      if (best_order.empty() || cert < best_cert) {
        best_cert = std::move(cert);
        best_order = std::move(order);
      }
      return;
    }
    for (int v : cells[target]) {
      Cells next;
      next.reserve(cells.size() + 1);
      next.insert(next.end(), cells.begin(), cells.begin() + static_cast<long>(target));
      next.push_back({v});
      std::vector<int> rest;
      for (int u : cells[target])
        if (u != v) rest.push_back(u);
      next.push_back(std::move(rest));
      next.insert(next.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
      run(std::move(next));
      if (aborted) return;
    }
  }
};

}  // namespace

std::vector<std::uint64_t> relabel(const std::vector<std::uint64_t>& rows, const std::vector<int>& order) {
  const std::size_t n = rows.size();
  std::vector<int> position(n);
  for (std::size_t i = 0; i < n; ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t r = rows[static_cast<std::size_t>(order[i])];
    while (r != 0) {
      int j = std::countr_zero(r);
      r &= r - 1;
      out[i] |= std::uint64_t{1} << position[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

std::optional<std::vector<int>> canonical_order(const std::vector<std::uint64_t>& rows, std::size_t leaf_budget) {
  if (rows.empty()) return std::vector<int>{};
  Cells unit(1);
  for (std::size_t v = 0; v < rows.size(); ++v) unit[0].push_back(static_cast<int>(v));
  Search s{rows, leaf_budget, 0, false, {}, {}};
  s.run(std::move(unit));
  if (s.aborted) return std::nullopt;
  return s.best_order;
}

std::string canonical_key(const std::vector<std::uint64_t>& rows, std::size_t max_canonical_order) {
  std::string key;
  const std::vector<std::uint64_t>* source = &rows;
  std::vector<std::uint64_t> relabelled;
  char tag = 'L';
  if (rows.size() <= max_canonical_order) {
    if (auto order = canonical_order(rows)) {
      relabelled = relabel(rows, *order);
      source = &relabelled;
      tag = 'C';
    }
  }
  const std::size_t row_bytes = (rows.size() + 7) / 8;
  key.reserve(2 + rows.size() * row_bytes);
  key.push_back(tag);
  key.push_back(static_cast<char>(rows.size()));
  for (std::uint64_t r : *source)
    for (std::size_t b = 0; b < row_bytes; ++b) key.push_back(static_cast<char>((r >> (8 * b)) & 0xFF));
  return key;
}

}  // namespace chromagraph
