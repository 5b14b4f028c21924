#include "polynomial.hpp"

#include "errors.hpp"

namespace chromagraph {

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

int sign_at(const IntPoly& p, const mpz_class& num, const mpz_class& den) {
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  // Horner on the homogenised form: acc = acc*num + c_i*den^(d-i).
  mpz_class acc = c.back();
  mpz_class den_power = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    den_power *= den;
    acc = acc * num + c[i] * den_power;
  }
  return sgn(acc);
}

int sign_at(const IntPoly& p, const mpq_class& x) {
  return sign_at(p, x.get_num(), x.get_den());
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<mpq_class> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDomain, "polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), mpq_class(0));
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    mpq_class q = rem[i + db] / bc[db];
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * bc[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  mpq_class inv = 1 / p.leading();
  return p * inv;
}

RatPoly monic_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> v;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpq_class scaled = c * l;
    v.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
  }
  if (v.back() < 0) g = -g;
  for (auto& c : v) c /= g;
  return IntPoly(std::move(v));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    mpz_class mag = abs(c[i]);
    if (out.empty()) {
      if (c[i] < 0) out += "-";
    } else {
      out += c[i] < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && i != 0;
    if (!unit) out += mag.get_str();
    if (i != 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace chromagraph
