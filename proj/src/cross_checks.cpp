#include "cross_checks.hpp"

#include <algorithm>
#include <cmath>

#include "log_derivative.hpp"
#include "power_sums.hpp"

namespace chromagraph {

RootSumCrossCheck root_sum_cross_check(const ChromPoly& p, const RootSet& roots, int max_degree, const mpq_class& K,
                                  double tolerance) {
  const auto prec = static_cast<mpfr_prec_t>(roots.precision_bits);
  const auto derivs = log_deriv_sequence(p.poly(), 3);
  const mpq_class radius = K * max_degree;
  RootSumCrossCheck out;
  for (int k : {2, 3}) {
    const mpq_class threshold = k == 2 ? mpq_class(-2 * radius) : mpq_class(-sqrt3_plus_one_upper() * radius);
    for (int j = 1; j <= 5; ++j) {
      RootSumCrossPoint pt;
      pt.k = k;
      pt.x = threshold - j;
      const Real exact(derivs[static_cast<std::size_t>(k - 1)].value(pt.x), prec);
      const Real formula =
          k == 2 ? root_sum_second_derivative(roots, pt.x) : root_sum_third_derivative(roots, pt.x);
      const Real rel = abs(formula - exact) / abs(exact);
      pt.exact = exact.to_double();
      pt.formula = formula.to_double();
      pt.relative_error = rel.to_double();
      pt.ok = exact.sign() < 0 && formula.sign() < 0 && pt.relative_error <= tolerance;
      out.ok = out.ok && pt.ok;
      out.points.push_back(std::move(pt));
    }
  }
  return out;
}

NewtonRootCheck newton_vs_roots(const ChromPoly& p, const RootSet& roots, int m, double tolerance) {
  const auto prec = static_cast<mpfr_prec_t>(roots.precision_bits);
  const auto exact = power_sums(p, m);
  const auto numeric = power_sums_from_roots(roots, m);
  NewtonRootCheck out;
  out.max_index = m;
  for (int i = 1; i <= m; ++i) {
    const Real e(exact.c[static_cast<std::size_t>(i)], prec);
    const Real diff = abs(numeric[static_cast<std::size_t>(i)] - e);
    const Real scale = std::max(Real(1L, prec), abs(e));
    const double rel = (diff / scale).to_double();
    out.worst_relative_error = std::max(out.worst_relative_error, rel);
    if (!(rel <= tolerance)) out.ok = false;
  }
  return out;
}

}  // namespace chromagraph
