#include "power_sums.hpp"

#include "errors.hpp"
#include "real.hpp"
#include "rational.hpp"

namespace chromagraph {

PowerSums power_sums(const ChromPoly& poly, int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "power_sums: m must be >= 1");
  const int n = poly.order();
  const auto& a = poly.poly();
  // a(n - j) is the coefficient of x^(n-j), i.e. (-1)^j e_j.
  auto high = [&](int j) { return a.coeff(static_cast<std::size_t>(n - j)); };

  PowerSums s;
  s.p.assign(static_cast<std::size_t>(m) + 1, mpz_class(0));
  s.c.assign(static_cast<std::size_t>(m) + 1, mpq_class(0));
  s.p[0] = n;
  for (int k = 1; k <= m; ++k) {
    mpz_class acc = 0;
    for (int j = 1; j < k && j <= n; ++j) acc += high(j) * s.p[static_cast<std::size_t>(k - j)];
    if (k <= n) acc += k * high(k);
    s.p[static_cast<std::size_t>(k)] = -acc;
    mpq_class c(-s.p[static_cast<std::size_t>(k)], mpz_class(k));
    c.canonicalize();
    s.c[static_cast<std::size_t>(k)] = c;
  }
  return s;
}

C1C2Report check_c1_c2(const Graph& g, const ChromPoly& poly) {
  const auto st = stats(g);
  const auto s = power_sums(poly, 2);
  C1C2Report r;
  r.c1 = s.c[1];
  r.c2 = s.c[2];
  r.expected_c1 = -mpq_class(static_cast<unsigned long>(st.m));
  r.expected_c2 = -mpq_class(static_cast<unsigned long>(st.triangles)) -
                  mpq_class(static_cast<unsigned long>(st.m), 2UL);
  r.expected_c2.canonicalize();
  r.c1_holds = r.c1 == r.expected_c1;
  r.c2_holds = r.c2 == r.expected_c2;
  return r;
}

C1C2Report check_c1_c2(const Graph& g) { return check_c1_c2(g, chromatic_polynomial(g)); }

SeriesEval series_log_eval(const PowerSums& sums, const mpq_class& x, int m, const mpq_class& K,
                           int max_degree, int n) {
  if (m < 1 || m > sums.count()) {
    throw Error(ErrorCode::kInvalidArgument, "series_log_eval: truncation order outside available power sums");
  }
  if (K <= 0 || max_degree < 0 || n < 1) throw Error(ErrorCode::kInvalidArgument, "series_log_eval: bad parameters");
  const mpq_class radius = K * max_degree;
  if (x >= 0 || -x <= radius) {
    throw Error(ErrorCode::kDomain, "series_log_eval: need x < 0 and |x| > K*Delta = " + to_string(radius));
  }
  SeriesEval e;
  e.x = x;
  e.m = m;
  const mpq_class inv = 1 / x;
  mpq_class power = 1;
  for (int i = 1; i <= m; ++i) {
    power *= inv;
    e.partial_sum += sums.c[static_cast<std::size_t>(i)] * power;
  }
  const mpq_class r = radius / -x;
  e.tail_bound = mpq_class(n, m + 1) * pow(r, static_cast<unsigned long>(m + 1)) / (1 - r);
  e.tail_bound.canonicalize();
  return e;
}

SeriesCheck check_series_tail(const ChromPoly& poly, const mpq_class& x, int m, const mpq_class& K,
                              int max_degree, int start_bits) {
  const int n = poly.order();
  SeriesCheck out;
  out.series = series_log_eval(power_sums(poly, m), x, m, K, max_degree, n);

  mpq_class xn = pow(x, static_cast<unsigned long>(n));
  const mpq_class ratio = poly(x) / xn;  // positive for x < 0

  for (int bits = std::max(start_bits, 128); bits <= 8192; bits *= 2) {
    const auto prec = static_cast<mpfr_prec_t>(bits);
    Interval ln = log_enclosure(ratio, prec);
    Real lo(prec), hi(prec), tail_lo(prec), tail_hi(prec);
    mpfr_sub_q(lo.get(), ln.lo.get(), out.series.partial_sum.get_mpq_t(), MPFR_RNDD);
    mpfr_sub_q(hi.get(), ln.hi.get(), out.series.partial_sum.get_mpq_t(), MPFR_RNDU);
    mpfr_set_q(tail_lo.get(), out.series.tail_bound.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(tail_hi.get(), out.series.tail_bound.get_mpq_t(), MPFR_RNDU);

    Real max_abs(prec), min_abs(prec);
    mpfr_abs(lo.get(), lo.get(), MPFR_RNDU);
    mpfr_abs(hi.get(), hi.get(), MPFR_RNDU);
    mpfr_max(max_abs.get(), lo.get(), hi.get(), MPFR_RNDU);
    // The difference interval straddles zero when lo <= 0 <= hi before abs.
    Real raw_lo(prec), raw_hi(prec);
    mpfr_sub_q(raw_lo.get(), ln.lo.get(), out.series.partial_sum.get_mpq_t(), MPFR_RNDD);
    mpfr_sub_q(raw_hi.get(), ln.hi.get(), out.series.partial_sum.get_mpq_t(), MPFR_RNDU);
    if (mpfr_sgn(raw_lo.get()) <= 0 && mpfr_sgn(raw_hi.get()) >= 0) {
      mpfr_set_zero(min_abs.get(), 1);
    } else {
      mpfr_min(min_abs.get(), lo.get(), hi.get(), MPFR_RNDD);
    }

    out.precision_bits = bits;
    out.difference_upper = max_abs.to_double();
    if (mpfr_lessequal_p(max_abs.get(), tail_lo.get())) {
      out.verdict = TailVerdict::kContained;
      return out;
    }
    if (mpfr_greater_p(min_abs.get(), tail_hi.get())) {
      out.verdict = TailVerdict::kViolated;
      return out;
    }
  }
  out.verdict = TailVerdict::kUndecided;
  return out;
}

EpsilonReport mean_size_epsilon(const ChromPoly& poly) {
  const int n = poly.order();
  const auto w = whitney_from_poly(poly);
  mpz_class weighted = 0, total = 0;
  for (int i = 1; i <= n; ++i) {
    weighted += (n - i) * w.a[static_cast<std::size_t>(i)];
    total += w.a[static_cast<std::size_t>(i)];
  }
  EpsilonReport r;
  r.epsilon = mpq_class(weighted, total);
  r.epsilon.canonicalize();
  r.epsilon_at_minus_one = epsilon_ratio(poly, -1);
  r.identity_holds = r.epsilon == n + r.epsilon_at_minus_one;
  return r;
}

EpsilonReport mean_size_epsilon(const Graph& g) { return mean_size_epsilon(chromatic_polynomial(g)); }

mpq_class epsilon_ratio(const ChromPoly& poly, const mpq_class& x) {
  if (x >= 0) throw Error(ErrorCode::kDomain, "epsilon_ratio requires x < 0");
  return poly.poly().derivative()(x) / poly(x);
}

}  // namespace chromagraph
