#include "real.hpp"

#include <vector>

#include "errors.hpp"

namespace chromagraph {

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(v_)) return "0";
  if (digits <= 0) digits = static_cast<int>(mpfr_get_prec(v_) * 0.30103) + 2;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

Real abs(Real a) {
  mpfr_abs(a.get(), a.get(), MPFR_RNDN);
  return a;
}

Real sqrt(Real a) {
  mpfr_sqrt(a.get(), a.get(), MPFR_RNDN);
  return a;
}

Real hypot(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real exp2_int(long e, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

Interval enclose(const mpq_class& q, mpfr_prec_t bits) {
  Interval r{Real(bits), Real(bits)};
  mpfr_set_q(r.lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval log_enclosure(const mpq_class& q, mpfr_prec_t bits) {
  if (q <= 0) throw Error(ErrorCode::kDomain, "logarithm of a non-positive value");
  Interval r = enclose(q, bits);
  // ln is increasing, so rounding each end outward keeps the enclosure.
  mpfr_log(r.lo.get(), r.lo.get(), MPFR_RNDD);
  mpfr_log(r.hi.get(), r.hi.get(), MPFR_RNDU);
  return r;
}

}  // namespace chromagraph
