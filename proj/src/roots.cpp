#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace chromagraph {
namespace {

Real from_double(double d, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_d(r.get(), d, MPFR_RNDN);
  return r;
}

Complex cadd(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex csub(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex cmul(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex cdiv(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
Real cabs(const Complex& a) { return hypot(a.re, a.im); }

struct Horner {
  Complex value;
  Complex slope;
};

Horner horner(const std::vector<Real>& coeffs, const Complex& z) {
  const mpfr_prec_t bits = z.re.precision();
  Horner h{{Real(bits), Real(bits)}, {Real(bits), Real(bits)}};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    h.slope = cadd(cmul(h.slope, z), h.value);
    h.value = cadd(cmul(h.value, z), {*it, Real(bits)});
  }
  return h;
}

std::vector<Real> to_reals(const IntPoly& p, mpfr_prec_t bits) {
  std::vector<Real> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c, bits);
  return out;
}

// Simultaneous Aberth-Ehrlich iteration for all roots of a square-free
// polynomial of degree >= 1.
Real relative_residual(const std::vector<Real>& coeffs, const Complex& r) {
  const mpfr_prec_t bits = r.re.precision();
  auto h = horner(coeffs, r);
  Real mod = cabs(r);
  Real scale(bits), power(1L, bits);
  for (const auto& c : coeffs) {
    scale += abs(c) * power;
    power *= mod;
  }
  if (scale.sign() == 0) return Real(bits);
  return cabs(h.value) / scale;
}

std::vector<Complex> aberth(const IntPoly& f, mpfr_prec_t bits, bool& converged) {
  const int d = static_cast<int>(f.degree());
  converged = true;
  if (d == 1) {
    mpq_class root(-f.coeff(0), f.coeff(1));
    root.canonicalize();
    return {{Real(root, bits), Real(bits)}};
  }
  const auto coeffs = to_reals(f, bits);

  // Fujiwara-style radius around the centroid of the roots.
  const double lead = f.leading().get_d();
  double radius = 0.0;
  for (int i = 1; i <= d; ++i) {
    double ratio = std::fabs(f.coeff(static_cast<std::size_t>(d - i)).get_d() / lead);
    radius = std::max(radius, std::pow(ratio, 1.0 / i));
  }
  radius = std::max(2.0 * radius, 1.0);
  const double center = -f.coeff(static_cast<std::size_t>(d - 1)).get_d() / (d * lead);

  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / d + 0.4;
    z.push_back({from_double(center + radius * std::cos(angle), bits),
                 from_double(radius * std::sin(angle), bits)});
  }

  const Real tol = exp2_int(-(static_cast<long>(bits) - 12), bits);
  // Below this relative residual the Newton step is rounding noise.
  const Real noise = exp2_int(-(static_cast<long>(bits) - 16), bits);
  const Real one(1L, bits);
  const int max_iterations = 200 + 4 * static_cast<int>(bits);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool done = true;
    for (int j = 0; j < d; ++j) {
      auto h = horner(coeffs, z[static_cast<std::size_t>(j)]);
      if (h.value.re.sign() == 0 && h.value.im.sign() == 0) continue;
      if (h.slope.re.sign() == 0 && h.slope.im.sign() == 0) h.slope.re = tol;
      Complex w = cdiv(h.value, h.slope);
      Complex s{Real(bits), Real(bits)};
      for (int l = 0; l < d; ++l) {
        if (l == j) continue;
        s = cadd(s, cdiv({one, Real(bits)}, csub(z[static_cast<std::size_t>(j)], z[static_cast<std::size_t>(l)])));
      }
      Complex denom = csub({one, Real(bits)}, cmul(w, s));
      Complex step = cdiv(w, denom);
      z[static_cast<std::size_t>(j)] = csub(z[static_cast<std::size_t>(j)], step);
      Real scale = std::max(one, cabs(z[static_cast<std::size_t>(j)]));
      if (cabs(step) > tol * scale && relative_residual(coeffs, z[static_cast<std::size_t>(j)]) > noise) done = false;
    }
    if (done) return z;
  }
  converged = false;
  return z;
}


}  // namespace

int RootSet::count() const {
  int c = 0;
  for (const auto& r : real_roots) c += r.multiplicity;
  for (const auto& p : complex_pairs) c += 2 * p.multiplicity;
  return c;
}

int default_precision_bits() {
  if (const char* env = std::getenv("CHROMAGRAPH_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64 && v <= 65536) return static_cast<int>(v);
  }
  return kDefaultPrecisionBits;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "square-free decomposition of zero");
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() < 1) return out;
  RatPoly f = make_monic(to_rational(p));
  RatPoly fp = f.derivative();
  RatPoly a = monic_gcd(f, fp);
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(fp, a).first;
  RatPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    RatPoly g = monic_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(primitive_part(g), i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

RootSet find_roots(const IntPoly& p, int precision_bits) {
  if (p.degree() < 1) throw Error(ErrorCode::kInvalidArgument, "find_roots needs degree >= 1");
  const std::size_t zeros = p.trailing_zeros();
  const auto factors = squarefree_decomposition(p.shift_down(zeros));

  Real best_residual(53);
  mpfr_set_inf(best_residual.get(), 1);
  for (int bits = std::max(precision_bits, 64); bits <= 4096; bits *= 2) {
    const auto prec = static_cast<mpfr_prec_t>(bits);
    RootSet rs;
    rs.precision_bits = bits;
    rs.residual_bound = Real(prec);
    bool all_converged = true;
    if (zeros > 0) {
      rs.real_roots.push_back({Real(prec), static_cast<int>(zeros)});
      rs.raw.push_back({{Real(prec), Real(prec)}, static_cast<int>(zeros)});
    }
    const auto full = to_reals(p, prec);
    const Real one(1L, prec);
    const Real snap = exp2_int(-bits / 4, prec);
    const Real near = exp2_int(-bits / 8, prec);
    for (const auto& [factor, mult] : factors) {
      bool converged = false;
      auto zs = aberth(factor, prec, converged);
      all_converged = all_converged && converged;
      int upper = 0, lower = 0;
      for (auto& z : zs) {
        Real res = relative_residual(full, z);
        if (res > rs.residual_bound) rs.residual_bound = res;
        rs.raw.push_back({z, mult});
        Real scale = std::max(one, cabs(z));
        Real imag = abs(z.im);
        if (imag <= snap * scale) {
          rs.real_roots.push_back({z.re, mult});
        } else {
          if (imag <= near * scale) rs.borderline = true;
          if (z.im.sign() > 0) {
            rs.complex_pairs.push_back({z.re, z.im, mult});
            ++upper;
          } else {
            ++lower;
          }
        }
      }
      if (upper != lower) rs.borderline = true;
    }
    std::sort(rs.real_roots.begin(), rs.real_roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    std::sort(rs.complex_pairs.begin(), rs.complex_pairs.end(), [](const ComplexPair& a, const ComplexPair& b) {
      return a.re < b.re || (!(b.re < a.re) && a.im < b.im);
    });

    if (rs.residual_bound < best_residual) best_residual = Real(rs.residual_bound);
    if (all_converged && rs.residual_bound <= exp2_int(-64, prec) && rs.count() == p.degree()) return rs;
  }
  throw Error(ErrorCode::kNoConvergence,
              "root solver did not converge; best residual " + best_residual.to_string(6));
}

RootSet find_roots(const ChromPoly& p, int precision_bits) { return find_roots(p.poly(), precision_bits); }

RootBoundReport check_root_bound(const RootSet& roots, int max_degree, const mpq_class& K) {
  const auto prec = static_cast<mpfr_prec_t>(roots.precision_bits);
  RootBoundReport r{Real(prec), Real(mpq_class(K * max_degree), prec), K, false};
  for (const auto& root : roots.real_roots) r.max_modulus = std::max(r.max_modulus, abs(root.value));
  for (const auto& pair : roots.complex_pairs) r.max_modulus = std::max(r.max_modulus, hypot(pair.re, pair.im));
  const Real slack = exp2_int(-roots.precision_bits / 4, prec) * std::max(Real(1L, prec), r.bound);
  r.satisfied = r.max_modulus <= r.bound + slack;
  return r;
}

Real root_sum_second_derivative(const RootSet& roots, const Real& x) {
  const auto prec = static_cast<mpfr_prec_t>(std::max<long>(roots.precision_bits, x.precision()));
  Real sum(prec);
  const Real two(2L, prec);
  for (const auto& r : roots.real_roots) {
    Real t = x - r.value;
    sum -= Real(static_cast<long>(r.multiplicity), prec) / (t * t);
  }
  for (const auto& p : roots.complex_pairs) {
    Real u = x - p.re;
    Real q = u * u + p.im * p.im;
    sum += Real(static_cast<long>(p.multiplicity), prec) * (two * p.im * p.im - two * u * u) / (q * q);
  }
  return sum;
}

Real root_sum_third_derivative(const RootSet& roots, const Real& x) {
  const auto prec = static_cast<mpfr_prec_t>(std::max<long>(roots.precision_bits, x.precision()));
  Real sum(prec);
  const Real two(2L, prec), three(3L, prec), four(4L, prec);
  for (const auto& r : roots.real_roots) {
    Real t = x - r.value;
    sum += Real(static_cast<long>(r.multiplicity), prec) * two / (t * t * t);
  }
  for (const auto& p : roots.complex_pairs) {
    Real u = x - p.re;
    Real q = u * u + p.im * p.im;
    sum += Real(static_cast<long>(p.multiplicity), prec) * four * u * (u * u - three * p.im * p.im) / (q * q * q);
  }
  return sum;
}

Real root_sum_second_derivative(const RootSet& roots, const mpq_class& x) {
  return root_sum_second_derivative(roots, Real(x, roots.precision_bits));
}

Real root_sum_third_derivative(const RootSet& roots, const mpq_class& x) {
  return root_sum_third_derivative(roots, Real(x, roots.precision_bits));
}

mpq_class sqrt3_plus_one_upper() { return mpq_class(27321, 10000); }

RootSumRegionReport root_sum_region_check(const RootSet& roots, int max_degree, const mpq_class& K) {
  const auto prec = static_cast<mpfr_prec_t>(roots.precision_bits);
  RootSumRegionReport rep;
  const mpq_class radius = K * max_degree;
  rep.second_threshold = -2 * radius;
  rep.third_threshold = -sqrt3_plus_one_upper() * radius;
  rep.third_threshold.canonicalize();
  const mpq_class unit = radius > 1 ? mpq_class(radius / 2) : mpq_class(1, 2);
  auto samples = [&](const mpq_class& t) {
    std::vector<mpq_class> xs;
    for (int j = 1; j <= 5; ++j) xs.push_back(t - j * unit);
    xs.push_back(2 * t - unit);
    xs.push_back(10 * t - unit);
    return xs;
  };
  rep.second_samples = samples(rep.second_threshold);
  rep.third_samples = samples(rep.third_threshold);

  const Real sqrt3 = sqrt(Real(3L, prec));
  for (const auto& xq : rep.second_samples) {
    const Real x(xq, prec);
    if (root_sum_second_derivative(roots, x).sign() >= 0) rep.second_negative = false;
    for (const auto& r : roots.real_roots) {
      if (x >= r.value) rep.per_term_ok = false;
    }
    for (const auto& p : roots.complex_pairs) {
      if (!(x < -(abs(p.re) + abs(p.im)))) continue;
      Real u = x - p.re;
      if (!(p.im * p.im < u * u)) rep.per_term_ok = false;  // 2b^2 - 2u^2 < 0
    }
  }
  for (const auto& xq : rep.third_samples) {
    const Real x(xq, prec);
    if (root_sum_third_derivative(roots, x).sign() >= 0) rep.third_negative = false;
    for (const auto& r : roots.real_roots) {
      if (x >= r.value) rep.per_term_ok = false;
    }
    for (const auto& p : roots.complex_pairs) {
      if (!(x < -(abs(p.re) + sqrt3 * abs(p.im)))) continue;
      Real u = x - p.re;
      // 4u(u^2 - 3b^2) < 0 with u < 0 needs u^2 > 3b^2.
      if (!(u.sign() < 0 && Real(3L, prec) * p.im * p.im < u * u)) rep.per_term_ok = false;
    }
  }
  return rep;
}

std::vector<Real> power_sums_from_roots(const RootSet& roots, int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "power_sums_from_roots: m must be >= 1");
  const auto prec = static_cast<mpfr_prec_t>(roots.precision_bits);
  std::vector<Real> c(static_cast<std::size_t>(m) + 1, Real(prec));
  std::vector<Complex> powers;
  for (const auto& [z, mult] : roots.raw) powers.push_back(z);
  const Real tol_factor = exp2_int(-roots.precision_bits / 2, prec);
  for (int i = 1; i <= m; ++i) {
    Complex sum{Real(prec), Real(prec)};
    Real magnitude(prec);
    for (std::size_t j = 0; j < powers.size(); ++j) {
      const Real mult(static_cast<long>(roots.raw[j].second), prec);
      sum = cadd(sum, {mult * powers[j].re, mult * powers[j].im});
      magnitude += mult * cabs(powers[j]);
    }
    if (abs(sum.im) > tol_factor * std::max(Real(1L, prec), magnitude)) {
      throw Error(ErrorCode::kNoConvergence,
                  "imaginary parts of power sum " + std::to_string(i) + " do not cancel");
    }
    c[static_cast<std::size_t>(i)] = -(sum.re / Real(static_cast<long>(i), prec));
    if (i < m) {
      for (std::size_t j = 0; j < powers.size(); ++j) powers[j] = cmul(powers[j], roots.raw[j].first);
    }
  }
  return c;
}

}  // namespace chromagraph
