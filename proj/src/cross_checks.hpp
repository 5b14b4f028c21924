#pragma once

#include <gmpxx.h>

#include <vector>

#include "chromatic.hpp"
#include "roots.hpp"

namespace chromagraph {

struct RootSumCrossPoint {
  int k = 0;
  mpq_class x;
  double exact = 0.0;    // N_k(x) / P(x)^k, rounded for reporting
  double formula = 0.0;  // root-sum value
  double relative_error = 0.0;
  bool ok = false;       // both negative and within tolerance
};

struct RootSumCrossCheck {
  std::vector<RootSumCrossPoint> points;
  bool ok = true;
};

inline constexpr double kRootSumRelativeTolerance = 1e-6;

// Root-sum second and third derivatives against the exact rational values:
// k = 2 at x = -2 K Delta - j and k = 3 at x = -(sqrt3+1) K Delta - j for
// j = 1..5, with the sqrt3+1 factor over-approximated.
RootSumCrossCheck root_sum_cross_check(const ChromPoly& p, const RootSet& roots, int max_degree, const mpq_class& K,
                                  double tolerance = kRootSumRelativeTolerance);

struct NewtonRootCheck {
  int max_index = 0;
  double worst_relative_error = 0.0;
  bool ok = true;
};

// c_i from Newton's identities against c_i summed over the numeric roots.
NewtonRootCheck newton_vs_roots(const ChromPoly& p, const RootSet& roots, int m, double tolerance = 1e-12);

}  // namespace chromagraph
