#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "polynomial.hpp"

namespace chromagraph {

struct KConstant {
  mpq_class value;
  std::string attribution;
};

/// Published values of the root-modulus constant K (|root| <= K * Delta),
/// loosest first.
const std::vector<KConstant>& k_catalog();

// 17/4
mpq_class default_k();
// 333/50
mpq_class theorem_constant();

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// f1(x) = 8x^2 - 15 x Delta k + k(k+1) + 2 (17 Delta / 4)^2 k(k+1)
mpq_class f1_eval(int delta, int k, const mpq_class& x);
// f(x) = (x + 17 Delta k / 4) f1(x) - 4 x^3
mpq_class f_eval(int delta, int k, const mpq_class& x);
// f as an exact polynomial in x, for differentiation.
RatPoly f_polynomial(int delta, int k);

struct AuditRow {
  int delta = 0;
  int k = 0;
  mpq_class x;  // -333 Delta k / 50
  mpq_class f1;
  mpq_class f;
  bool endpoint_negative = false;  // f(x) < 0
  bool f1_positive = false;        // at x and every sample
  bool derivative_positive = false;
  bool monotone = false;
  bool bernoulli = false;
  bool pass = false;
  std::string failure;  // first failed assertion, empty on pass
};

// Ten rationals evenly spaced strictly inside (-100 Delta k, -17 Delta k / 4).
std::vector<mpq_class> audit_samples(int delta, int k);

AuditRow audit_row(int delta, int k);
std::vector<AuditRow> audit_theorem_bound(IntRange delta_range, IntRange k_range);

// (1 + 17 Delta / (4x))^k >= 1 + 17 Delta k / (4x)
bool bernoulli_step_holds(int delta, int k, const mpq_class& x);

struct SignInequalityPoint {
  mpq_class x;
  mpq_class lhs;  // (-1)^(k-1) (x + 17 Delta / 4)^k f1(x)
  mpq_class rhs;  // (-1)^(k-1) 4 x^(k+2)
  bool holds = false;
};

struct SignInequalityReport {
  int delta = 0;
  int k = 0;
  std::vector<SignInequalityPoint> points;
  bool all_hold = true;
};

// Every x must satisfy x <= -333 Delta k / 50 (kDomain otherwise).
SignInequalityReport sign_inequality_check(int delta, int k, const std::vector<mpq_class>& xs);

std::string audit_csv(const std::vector<AuditRow>& rows);

}  // namespace chromagraph
