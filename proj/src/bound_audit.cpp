#include "bound_audit.hpp"

#include <sstream>

#include "errors.hpp"
#include "rational.hpp"

namespace chromagraph {

const std::vector<KConstant>& k_catalog() {
  static const std::vector<KConstant> catalog{
      {mpq_class(797, 100), "Sokal (2001)"},
      {mpq_class(691, 100), "Fernandez and Procacci (2008)"},
      {mpq_class(297, 50), "Jenssen, Patel and Regts (2024)"},
      {mpq_class(17, 4), "Bencs and Regts (2026)"},
  };
  return catalog;
}

mpq_class default_k() { return mpq_class(17, 4); }

mpq_class theorem_constant() { return mpq_class(333, 50); }

namespace {

void check_params(int delta, int k) {
  if (delta < 1) throw Error(ErrorCode::kInvalidArgument, "Delta must be >= 1");
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be >= 2");
}

mpq_class shift(int delta, int k) {
  mpq_class s(17L * delta * k, 4L);
  s.canonicalize();
  return s;
}

}  // namespace

mpq_class f1_eval(int delta, int k, const mpq_class& x) {
  check_params(delta, k);
  const mpq_class dk(static_cast<long>(delta) * k);
  const mpq_class kk1(static_cast<long>(k) * (k + 1));
  const mpq_class a(17L * delta, 4L);
  return 8 * x * x - 15 * x * dk + kk1 + 2 * a * a * kk1;
}

mpq_class f_eval(int delta, int k, const mpq_class& x) {
  return (x + shift(delta, k)) * f1_eval(delta, k, x) - 4 * x * x * x;
}

RatPoly f_polynomial(int delta, int k) {
  check_params(delta, k);
  const mpq_class dk(static_cast<long>(delta) * k);
  const mpq_class kk1(static_cast<long>(k) * (k + 1));
  const mpq_class a(17L * delta, 4L);
  RatPoly f1{kk1 + 2 * a * a * kk1, mpq_class(-15 * dk), mpq_class(8)};
  RatPoly linear{shift(delta, k), mpq_class(1)};
  return linear * f1 - RatPoly::monomial(3, mpq_class(4));
}

std::vector<mpq_class> audit_samples(int delta, int k) {
  const mpq_class lo(-100L * delta * k);
  const mpq_class hi = -shift(delta, k);
  std::vector<mpq_class> xs;
  for (int j = 1; j <= 10; ++j) {
    mpq_class x = lo + (hi - lo) * mpq_class(j, 11);
    x.canonicalize();
    xs.push_back(x);
  }
  return xs;
}

bool bernoulli_step_holds(int delta, int k, const mpq_class& x) {
  const mpq_class t = mpq_class(17L * delta, 4L) / x;
  return pow(mpq_class(1 + t), static_cast<unsigned long>(k)) >= 1 + k * t;
}

AuditRow audit_row(int delta, int k) {
  AuditRow row;
  row.delta = delta;
  row.k = k;
  row.x = -theorem_constant() * delta * k;
  row.f1 = f1_eval(delta, k, row.x);
  row.f = f_eval(delta, k, row.x);
  row.endpoint_negative = row.f < 0;

  const RatPoly f = f_polynomial(delta, k);
  const RatPoly df = f.derivative();
  const auto xs = audit_samples(delta, k);
  row.f1_positive = row.f1 > 0;
  row.derivative_positive = true;
  row.monotone = true;
  row.bernoulli = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (f1_eval(delta, k, xs[i]) <= 0) row.f1_positive = false;
    if (df(xs[i]) <= 0) row.derivative_positive = false;
    if (i > 0 && !(f(xs[i - 1]) < f(xs[i]))) row.monotone = false;
    if (!bernoulli_step_holds(delta, k, xs[i])) row.bernoulli = false;
  }
  row.pass = row.endpoint_negative && row.f1_positive && row.derivative_positive && row.monotone && row.bernoulli;
  if (!row.endpoint_negative) {
    row.failure = "f(-333*Delta*k/50) >= 0";
  } else if (!row.f1_positive) {
    row.failure = "f1 <= 0 at a sample";
  } else if (!row.derivative_positive) {
    row.failure = "f' <= 0 at a sample";
  } else if (!row.monotone) {
    row.failure = "f not increasing across samples";
  } else if (!row.bernoulli) {
    row.failure = "Bernoulli step fails at a sample";
  }
  return row;
}

std::vector<AuditRow> audit_theorem_bound(IntRange delta_range, IntRange k_range) {
  if (delta_range.lo > delta_range.hi || k_range.lo > k_range.hi) {
    throw Error(ErrorCode::kInvalidArgument, "audit range is empty or inverted");
  }
  if (delta_range.lo < 1 || k_range.lo < 2) {
    throw Error(ErrorCode::kInvalidArgument, "audit needs Delta >= 1 and k >= 2");
  }
  std::vector<AuditRow> rows;
  for (int d = delta_range.lo; d <= delta_range.hi; ++d)
    for (int k = k_range.lo; k <= k_range.hi; ++k) rows.push_back(audit_row(d, k));
  return rows;
}

SignInequalityReport sign_inequality_check(int delta, int k, const std::vector<mpq_class>& xs) {
  check_params(delta, k);
  const mpq_class x0 = -theorem_constant() * delta * k;
  SignInequalityReport rep;
  rep.delta = delta;
  rep.k = k;
  const mpq_class a(17L * delta, 4L);
  const int s = (k - 1) % 2 == 0 ? 1 : -1;
  for (const auto& x : xs) {
    if (x > x0) {
      throw Error(ErrorCode::kDomain, "the sign inequality is only claimed for x <= -333*Delta*k/50, got " + to_string(x));
    }
    SignInequalityPoint p;
    p.x = x;
    p.lhs = s * pow(mpq_class(x + a), static_cast<unsigned long>(k)) * f1_eval(delta, k, x);
    p.rhs = s * 4 * pow(x, static_cast<unsigned long>(k + 2));
    p.holds = p.lhs < p.rhs;
    rep.all_hold = rep.all_hold && p.holds;
    rep.points.push_back(std::move(p));
  }
  return rep;
}

std::string audit_csv(const std::vector<AuditRow>& rows) {
  std::ostringstream out;
  out << "Delta,k,x,f1,f,pass\n";
  for (const auto& r : rows) {
    out << r.delta << ',' << r.k << ',' << to_string(r.x) << ',' << to_string(r.f1) << ',' << to_string(r.f) << ','
        << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace chromagraph
