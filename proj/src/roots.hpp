#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "chromatic.hpp"
#include "real.hpp"

namespace chromagraph {

struct Complex {
  Real re;
  Real im;
};

struct RealRoot {
  Real value;
  int multiplicity = 1;
};

// a + ib and a - ib, stored once with b > 0.
struct ComplexPair {
  Real re;
  Real im;
  int multiplicity = 1;
};

/// All roots of a polynomial, with multiplicities.
///
/// Multiplicities are exact: the zero root is split off from the trailing
/// zero coefficients and the rest goes through a square-free decomposition
/// over Q before any floating-point work. `raw` keeps the unsnapped solver
/// output (conjugates included) for cross-checks.
struct RootSet {
  std::vector<RealRoot> real_roots;
  std::vector<ComplexPair> complex_pairs;
  std::vector<std::pair<Complex, int>> raw;
  // max over roots r of |P(r)| / sum_i |p_i| |r|^i
  Real residual_bound;
  int precision_bits = 0;
  // Some root had an imaginary part close to, but above, the snapping
  // threshold.
  bool borderline = false;

  int count() const;
};

inline constexpr int kDefaultPrecisionBits = 212;

// CHROMAGRAPH_PRECISION_BITS when set to an integer in [64, 65536], else 212.
int default_precision_bits();

// Restarts with doubled precision until residual_bound <= 2^-64.
RootSet find_roots(const IntPoly& p, int precision_bits);
RootSet find_roots(const ChromPoly& p, int precision_bits = default_precision_bits());

// Square-free decomposition of a nonzero polynomial: primitive integer
// factors with their multiplicities. Constant factors are dropped.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

struct RootBoundReport {
  Real max_modulus;
  Real bound;  // K * Delta
  mpq_class K;
  bool satisfied = false;
};

RootBoundReport check_root_bound(const RootSet& roots, int max_degree, const mpq_class& K);

// Root-sum forms of the second and third derivative of ln[(-1)^n P(x)],
// every term weighted by multiplicity.
Real root_sum_second_derivative(const RootSet& roots, const Real& x);
Real root_sum_third_derivative(const RootSet& roots, const Real& x);
Real root_sum_second_derivative(const RootSet& roots, const mpq_class& x);
Real root_sum_third_derivative(const RootSet& roots, const mpq_class& x);

// Rational upper bound used for sqrt(3) + 1.
mpq_class sqrt3_plus_one_upper();

struct RootSumRegionReport {
  mpq_class second_threshold;  // -2 K Delta
  mpq_class third_threshold;   // -(sqrt3 + 1) K Delta, over-approximated
  std::vector<mpq_class> second_samples;
  std::vector<mpq_class> third_samples;
  bool second_negative = true;
  bool third_negative = true;
  // Every individual real-root and conjugate-pair term has the sign the
  // term-wise argument requires at each sample.
  bool per_term_ok = true;

  bool ok() const { return second_negative && third_negative && per_term_ok; }
};

RootSumRegionReport root_sum_region_check(const RootSet& roots, int max_degree, const mpq_class& K);

// c_i = -(1/i) sum_j alpha_j^i from the numeric roots, i = 1..m (index 0
// unused). Throws kNoConvergence when the imaginary parts fail to cancel.
std::vector<Real> power_sums_from_roots(const RootSet& roots, int m);

}  // namespace chromagraph
