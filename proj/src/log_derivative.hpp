#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "chromatic.hpp"
#include "graph.hpp"

namespace chromagraph {

/// The k-th derivative of ln[(-1)^n P(x)] written as N_k(x) / P(x)^k with
/// N_1 = P' and N_{k+1} = N_k' P - k N_k P'.
class LogDerivRational {
 public:
  LogDerivRational(IntPoly base, int k, IntPoly numerator)
      : base_(std::move(base)), k_(k), numerator_(std::move(numerator)) {}

  const IntPoly& base() const { return base_; }
  int order() const { return k_; }
  const IntPoly& numerator() const { return numerator_; }

  // Exact value at a rational point where base(x) != 0.
  mpq_class value(const mpq_class& x) const;

 private:
  IntPoly base_;
  int k_;
  IntPoly numerator_;
};

// Works for any nonzero integer polynomial, not only chromatic ones.
LogDerivRational log_deriv_rational(const IntPoly& p, int k);
LogDerivRational log_deriv_rational(const ChromPoly& p, int k);
// Orders 1..k_max sharing one run of the recurrence; element i has order i+1.
std::vector<LogDerivRational> log_deriv_sequence(const IntPoly& p, int k_max);

struct SignReport {
  mpq_class x;
  int k = 0;
  int sign = 0;
  bool exact = true;
};

// sign(N_k(x)) * sign(P(x))^k from homogenised integer sums; x < 0.
SignReport eval_sign_exact(const LogDerivRational& d, const mpq_class& x);

// Both sides of
//   (ln[(-1)^n P])^(k) = (ln P/x^n)^(k) + (k-1)! (-1)^(k-1) n / x^k
// with the middle term taken as LogDeriv_k(P) - LogDeriv_k(x^n). This makes
// the check an internal consistency test of the N_k representation.
struct LogSplitCheck {
  mpq_class lhs;
  mpq_class rhs;
  bool holds = false;
};

LogSplitCheck log_split_identity_check(const ChromPoly& p, int k, const mpq_class& x);

// -333/50 * Delta * k. A graph with Delta = 0 (single vertex) uses Delta = 1.
mpq_class theorem_boundary(int max_degree, int k);

// Signs at x0 = theorem_boundary, x0 - 1, 2 x0, 10 x0 and every extra point
// (each extra must be <= x0). Requires a connected graph and k >= 2.
std::vector<SignReport> verify_theorem_region(const Graph& g, int k,
                                              const std::vector<mpq_class>& extra_points = {});
std::vector<SignReport> verify_theorem_region(const Graph& g, const ChromPoly& p, int k,
                                              const std::vector<mpq_class>& extra_points = {});

struct ScanResult {
  int k = 0;
  mpq_class x_min;
  mpq_class step;
  std::vector<SignReport> points;
  // Greatest grid point x with sign -1 at x and at every grid point below it.
  std::optional<mpq_class> empirical_threshold;
  std::vector<mpq_class> violations;  // grid points with sign >= 0
};

inline constexpr std::size_t kMaxScanPoints = 1'000'000;

ScanResult threshold_scan(const Graph& g, int k, const mpq_class& x_min, const mpq_class& step);
ScanResult threshold_scan(const Graph& g, const ChromPoly& p, int k, const mpq_class& x_min,
                          const mpq_class& step);
// Scan without the graph-level connectivity precondition.
ScanResult threshold_scan(const IntPoly& p, int k, const mpq_class& x_min, const mpq_class& step);

}  // namespace chromagraph
