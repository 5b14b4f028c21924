#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chromatic.hpp"
#include "graph.hpp"

namespace chromagraph {

/// c[i] = -(1/i) * sum_j alpha_j^i over the n roots of P, for i = 1..m.
/// Index 0 is unused. p[i] holds the integer power sum itself.
struct PowerSums {
  std::vector<mpz_class> p;
  std::vector<mpq_class> c;

  int count() const { return static_cast<int>(c.size()) - 1; }
};

// Newton's identities on the coefficients; exact, no roots involved.
PowerSums power_sums(const ChromPoly& poly, int m);

struct C1C2Report {
  mpq_class c1;
  mpq_class c2;
  mpq_class expected_c1;  // -|E|
  mpq_class expected_c2;  // -|T| - |E|/2
  bool c1_holds = false;
  bool c2_holds = false;
};

C1C2Report check_c1_c2(const Graph& g);
C1C2Report check_c1_c2(const Graph& g, const ChromPoly& poly);

/// Truncated expansion sum_{i<=m} c_i x^-i of ln(P(x)/x^n), valid for
/// |x| > K*Delta, with a bound on the discarded tail derived from
/// |c_i| <= (n/i)(K*Delta)^i. Both values are exact rationals.
struct SeriesEval {
  mpq_class x;
  int m = 0;
  mpq_class partial_sum;
  mpq_class tail_bound;
};

SeriesEval series_log_eval(const PowerSums& sums, const mpq_class& x, int m, const mpq_class& K,
                           int max_degree, int n);

enum class TailVerdict { kContained, kViolated, kUndecided };

struct SeriesCheck {
  SeriesEval series;
  TailVerdict verdict = TailVerdict::kUndecided;
  // Enclosure of |ln(P(x)/x^n) - partial_sum| at the final precision.
  double difference_upper = 0.0;
  int precision_bits = 0;
};

// Compares the truncated series with a directed-rounding enclosure of the
// logarithm, doubling the working precision (from start_bits, at least 128)
// until the comparison with the tail bound is decided.
SeriesCheck check_series_tail(const ChromPoly& poly, const mpq_class& x, int m, const mpq_class& K,
                              int max_degree, int start_bits = 128);

struct EpsilonReport {
  mpq_class epsilon;           // sum (n-i) a_i / sum a_i
  mpq_class epsilon_at_minus_one;  // P'(-1)/P(-1)
  bool identity_holds = false;     // epsilon == n + epsilon_at_minus_one
};

EpsilonReport mean_size_epsilon(const Graph& g);
EpsilonReport mean_size_epsilon(const ChromPoly& poly);

// P'(x)/P(x) for rational x < 0.
mpq_class epsilon_ratio(const ChromPoly& poly, const mpq_class& x);

}  // namespace chromagraph
