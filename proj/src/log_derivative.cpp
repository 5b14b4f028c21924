#include "log_derivative.hpp"

#include "errors.hpp"
#include "rational.hpp"

namespace chromagraph {

mpq_class LogDerivRational::value(const mpq_class& x) const {
  const mpq_class b = base_(x);
  if (b == 0) throw Error(ErrorCode::kDomain, "log-derivative evaluated at a root");
  return numerator_(x) / pow(b, static_cast<unsigned long>(k_));
}

std::vector<LogDerivRational> log_deriv_sequence(const IntPoly& p, int k_max) {
  if (k_max < 1) throw Error(ErrorCode::kInvalidArgument, "log-derivative order must be >= 1");
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "log-derivative of the zero polynomial");
  std::vector<LogDerivRational> out;
  out.reserve(static_cast<std::size_t>(k_max));
  const IntPoly dp = p.derivative();
  IntPoly n = dp;
  out.emplace_back(p, 1, n);
  for (int k = 1; k < k_max; ++k) {
    n = n.derivative() * p - n * dp * mpz_class(k);
    out.emplace_back(p, k + 1, n);
  }
  return out;
}

LogDerivRational log_deriv_rational(const IntPoly& p, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "log-derivative order must be >= 1");
  return std::move(log_deriv_sequence(p, k).back());
}

LogDerivRational log_deriv_rational(const ChromPoly& p, int k) { return log_deriv_rational(p.poly(), k); }

SignReport eval_sign_exact(const LogDerivRational& d, const mpq_class& x) {
  if (x >= 0) throw Error(ErrorCode::kDomain, "eval_sign_exact requires x < 0");
  SignReport r;
  r.x = x;
  r.k = d.order();
  const int sp = sign_at(d.base(), x);
  if (sp == 0) throw Error(ErrorCode::kDomain, "base polynomial vanishes at " + to_string(x));
  const int sn = sign_at(d.numerator(), x);
  r.sign = (d.order() % 2 == 1) ? sn * sp : sn;
  return r;
}

LogSplitCheck log_split_identity_check(const ChromPoly& p, int k, const mpq_class& x) {
  if (x >= 0) throw Error(ErrorCode::kDomain, "log_split_identity_check requires x < 0");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "log-derivative order must be >= 1");
  const int n = p.order();
  LogSplitCheck c;
  c.lhs = log_deriv_rational(p, k).value(x);
  const mpq_class reduced = c.lhs - log_deriv_rational(IntPoly::monomial(static_cast<std::size_t>(n)), k).value(x);
  mpq_class term(factorial(static_cast<unsigned long>(k - 1)) * n);
  term /= pow(x, static_cast<unsigned long>(k));
  if ((k - 1) % 2 != 0) term = -term;
  c.rhs = reduced + term;
  c.holds = c.lhs == c.rhs;
  return c;
}

mpq_class theorem_boundary(int max_degree, int k) {
  const int delta = max_degree < 1 ? 1 : max_degree;
  mpq_class x0(-333L * delta * k, 50L);
  x0.canonicalize();
  return x0;
}

std::vector<SignReport> verify_theorem_region(const Graph& g, const ChromPoly& p, int k,
                                              const std::vector<mpq_class>& extra_points) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "theorem region check needs k >= 2");
  const auto st = stats(g);
  if (!st.connected) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  const mpq_class x0 = theorem_boundary(st.max_degree, k);
  std::vector<mpq_class> xs{x0, x0 - 1, 2 * x0, 10 * x0};
  for (const auto& e : extra_points) {
    if (e > x0) throw Error(ErrorCode::kInvalidArgument, "extra point " + to_string(e) + " lies above -6.66*Delta*k");
    xs.push_back(e);
  }
  const auto d = log_deriv_rational(p, k);
  std::vector<SignReport> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(eval_sign_exact(d, x));
  return out;
}

std::vector<SignReport> verify_theorem_region(const Graph& g, int k, const std::vector<mpq_class>& extra_points) {
  return verify_theorem_region(g, chromatic_polynomial(g), k, extra_points);
}

ScanResult threshold_scan(const IntPoly& p, int k, const mpq_class& x_min, const mpq_class& step) {
  if (!(x_min < 0) || !(step > 0)) throw Error(ErrorCode::kInvalidArgument, "scan needs x_min < 0 < step");
  mpq_class span = -x_min / step;
  mpz_class count = span.get_num() / span.get_den();  // floor(|x_min| / step)
  if (count * step == -x_min) count -= 1;             // 0 itself is excluded
  count += 1;
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "scan grid is empty");
  if (count > kMaxScanPoints) throw Error(ErrorCode::kLimit, "scan grid exceeds point limit");

  const auto d = log_deriv_rational(p, k);
  ScanResult r;
  r.k = k;
  r.x_min = x_min;
  r.step = step;
  bool clean_so_far = true;
  mpq_class x = x_min;
  for (unsigned long i = 0; i < count.get_ui(); ++i, x += step) {
    auto s = eval_sign_exact(d, x);
    if (s.sign >= 0) {
      r.violations.push_back(x);
      clean_so_far = false;
    } else if (clean_so_far) {
      r.empirical_threshold = x;
    }
    r.points.push_back(std::move(s));
  }
  return r;
}

ScanResult threshold_scan(const Graph& g, const ChromPoly& p, int k, const mpq_class& x_min, const mpq_class& step) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  return threshold_scan(p.poly(), k, x_min, step);
}

ScanResult threshold_scan(const Graph& g, int k, const mpq_class& x_min, const mpq_class& step) {
  return threshold_scan(g, chromatic_polynomial(g), k, x_min, step);
}

}  // namespace chromagraph
