#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bound_audit.hpp"
#include "graph.hpp"

namespace chromagraph {

inline constexpr std::string_view kSchema = "chromagraph/1";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class OutputFormat { kJson, kCsv };

struct RunConfig {
  std::string input;  // echoed verbatim, e.g. "family:cycle:5"
  std::vector<int> k_set{2, 3, 4, 5, 6};
  mpq_class K{17, 4};
  mpq_class grid_x_min{-10};
  mpq_class grid_step{1, 4};
  OutputFormat format = OutputFormat::kJson;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::uint64_t seed = 1;
  bool strict = false;
  bool reproducible = false;
  IntRange audit_delta{1, 20};
  IntRange audit_k{2, 64};
  int precision_bits = 0;  // 0: default_precision_bits()
};

// Process exit codes.
inline constexpr int kExitClean = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFinding = 3;

struct RunOutput {
  std::string text;
  int exit_code = kExitClean;
};

// A file is an edge list when its first meaningful line is a lone integer,
// otherwise one graph6 string per line. Parse errors carry source:line.
std::vector<Graph> load_corpus_text(std::string_view text, std::string_view source_name);

// "2,3,5-8" -> {2,3,5,6,7,8}, sorted and deduplicated.
std::vector<int> parse_k_list(std::string_view text);
// "A:B" or "A".
IntRange parse_int_range(std::string_view text);
// "XMIN:STEP" as rationals.
std::pair<mpq_class, mpq_class> parse_grid(std::string_view text);

// Validates k_set against [lo, 64]; throws kInvalidArgument.
void validate_k_set(const std::vector<int>& k_set, int lo);

RunOutput run_poly(const RunConfig& config, const std::vector<Graph>& corpus);
RunOutput run_verify(const RunConfig& config, const std::vector<Graph>& corpus);
// JSON report, or the (graph, x, k, sign) grid when format is CSV.
RunOutput run_scan(const RunConfig& config, const std::vector<Graph>& corpus);
RunOutput run_audit(const RunConfig& config);

// Runs task(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

}  // namespace chromagraph
