#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace chromagraph {

/// Owning MPFR scalar. Each value carries its own precision; arithmetic
/// results take the larger precision of the operands and round to nearest.
/// get() exposes the raw handle for directed-rounding work.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 53) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(const mpz_class& value, mpfr_prec_t bits) : Real(bits) { mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN); }
  Real(const mpq_class& value, mpfr_prec_t bits) : Real(bits) { mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal with the given number of significant digits; 0 means enough
  // digits to round-trip the binary value.
  std::string to_string(int digits = 0) const;
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o) { return apply(o, mpfr_add); }
  Real& operator-=(const Real& o) { return apply(o, mpfr_sub); }
  Real& operator*=(const Real& o) { return apply(o, mpfr_mul); }
  Real& operator/=(const Real& o) { return apply(o, mpfr_div); }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

 private:
  using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  Real& apply(const Real& o, BinaryOp op) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

Real abs(Real a);
Real sqrt(Real a);
Real hypot(const Real& a, const Real& b);
// 2^e at the given precision.
Real exp2_int(long e, mpfr_prec_t bits);

// Closed interval [lo, hi] with both ends rounded outward.
struct Interval {
  Real lo;
  Real hi;
};

Interval enclose(const mpq_class& q, mpfr_prec_t bits);
// ln of a positive rational, enclosed.
Interval log_enclosure(const mpq_class& q, mpfr_prec_t bits);

}  // namespace chromagraph
