#include "mlfrac/special_functions.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <quadmath.h>

#include <cmath>
#include <limits>

namespace mlfrac {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

// Minimal arithmetic shims so one series loop serves every precision tier.
template <class R>
struct Tier;

template <>
struct Tier<long double> {
  using R = long double;
  static R eps() { return std::numeric_limits<R>::epsilon(); }
  static R rgamma(R x) {
    if (x <= 0 && x == std::floor(x)) return 0;
    if (x > 1000) return std::exp(-std::lgamma(x));
    if (x < -1000) {
      R pi = std::acos(R(-1));
      return std::sin(pi * x) * std::exp(std::lgamma(1 - x)) / pi;
    }
    return 1 / std::tgamma(x);
  }
  static R hypot(R a, R b) { return std::hypot(a, b); }
  static double to_double(R x) { return static_cast<double>(x); }
};

template <>
struct Tier<__float128> {
  using R = __float128;
  static R eps() { return FLT128_EPSILON; }
  static R rgamma(R x) {
    if (x <= 0 && x == floorq(x)) return 0;
    if (x > 1000) return expq(-lgammaq(x));
    if (x < -1000) {
      R pi = acosq(R(-1));
      return sinq(pi * x) * expq(lgammaq(1 - x)) / pi;
    }
    return 1 / tgammaq(x);
  }
  static R hypot(R a, R b) { return hypotq(a, b); }
  static double to_double(R x) { return static_cast<double>(x); }
};

template <>
struct Tier<Float50> {
  using R = Float50;
  static R eps() { return std::numeric_limits<R>::epsilon(); }
  static R rgamma(const R& x) {
    if (x <= 0 && x == floor(x)) return R(0);
    return 1 / boost::math::tgamma(x);
  }
  static R hypot(const R& a, const R& b) { return sqrt(a * a + b * b); }
  static double to_double(const R& x) { return x.convert_to<double>(); }
};

struct SeriesOutcome {
  cplx value;
  double abs_sum = 0.0;
  double tail = 0.0;
  double rounding = 0.0;
  int terms = 0;
};

template <class R>
SeriesOutcome sum_series(cplx z, const MLParams& p, double tol) {
  using T = Tier<R>;
  const R zr = R(z.real()), zi = R(z.imag());
  const R a = R(p.alpha), b = R(p.beta);
  R pr = 1, pim = 0;
  R sr = 0, si = 0;
  double abs_sum = 0.0, prev = -1.0, ratio = 0.0;
  const int kmax = 100000;
  SeriesOutcome out;
  int k = 0;
  for (; k < kmax; ++k) {
    const R g = T::rgamma(a * R(k) + b);
    const R tr = pr * g, ti = pim * g;
    const double mag = T::to_double(T::hypot(tr, ti));
    if (!std::isfinite(mag))
      throw Error("series-divergent-at-precision", "term overflow at k=" + std::to_string(k));
    const double partial = std::hypot(T::to_double(sr), T::to_double(si));
    const bool past_peak = p.alpha * k + p.beta > 1.0 && prev >= 0.0 && mag <= prev;
    if (mag > 0.0 && past_peak && mag < tol && mag <= 1e-18 * partial) {
      out.tail = mag / std::max(1e-3, 1.0 - ratio);
      break;
    }
    if (mag == 0.0 && k > 0 && zr == 0 && zi == 0) break;
    sr += tr;
    si += ti;
    abs_sum += mag;
    if (mag > 0.0) {
      if (prev > 0.0) ratio = mag / prev;
      prev = mag;
    }
    const R nr = pr * zr - pim * zi;
    pim = pr * zi + pim * zr;
    pr = nr;
  }
  if (k == kmax) throw Error("series-divergent-at-precision", "no convergence");
  out.value = cplx(T::to_double(sr), T::to_double(si));
  out.abs_sum = abs_sum;
  out.rounding = 4.0 * abs_sum * T::to_double(T::eps()) + 1.2e-16 * std::abs(out.value);
  out.terms = k;
  return out;
}

bool resolved(const SeriesOutcome& s, double eps) {
  return 4.0 * s.abs_sum * eps <= 5e-17 * std::abs(s.value);
}

double stokes_weight(double X, double phi) {
  phi = std::abs(phi);
  if (phi <= M_PI / 2) return 1.0;
  if (phi >= 1.5 * M_PI) return 0.0;
  const double d = phi - M_PI;
  const double sigma = X * std::sin(d) / std::sqrt(2.0 * X * std::cos(d));
  return 0.5 * std::erfc(sigma);
}

cplx exponential_part(cplx z, const MLParams& p) {
  const double X = std::pow(std::abs(z), 1.0 / p.alpha);
  const double th = std::arg(z);
  cplx sum(0.0, 0.0);
  const double reach = 1.5 * M_PI * p.alpha;
  const int kmin = static_cast<int>(std::ceil((-reach - th) / (2 * M_PI)));
  const int kmax = static_cast<int>(std::floor((reach - th) / (2 * M_PI)));
  for (int k = kmin; k <= kmax; ++k) {
    const double phi = (th + 2 * M_PI * k) / p.alpha;
    const double w = stokes_weight(X, phi);
    if (w == 0.0) continue;
    const double re = X * std::cos(phi) + (1.0 - p.beta) * std::log(X);
    const double im = X * std::sin(phi) + (1.0 - p.beta) * phi;
    const double mag = w / p.alpha * std::exp(re);
    if (mag == 0.0) continue;
    if (!std::isfinite(mag)) throw Error("overflow", "exponential term exceeds double range");
    sum += cplx(mag * std::cos(im), mag * std::sin(im));
  }
  return sum;
}

// z^-j / Gamma(x) formed in log space so huge and tiny factors never meet.
cplx algebraic_term(double log_abs_z, double arg_z, double x, int j) {
  if (x <= 0 && x == std::floor(x)) return 0.0;
  const double sign = (x > 0 || static_cast<long>(std::ceil(-x)) % 2 == 0) ? 1.0 : -1.0;
  const double mag = std::exp(-j * log_abs_z - std::lgamma(x));
  return sign * std::polar(mag, -j * arg_z);
}

}  // namespace

double rgamma(double x) {
  if (x <= 0 && x == std::floor(x)) return 0.0;
  return static_cast<double>(Tier<long double>::rgamma(x));
}

void validate(const MLParams& p) {
  if (!(p.alpha > 0.0 && p.alpha <= 2.0)) throw Error("invalid-params", "alpha must lie in (0, 2]");
  if (!std::isfinite(p.beta)) throw Error("invalid-params", "beta must be finite");
}

double switching_radius(double alpha) { return std::pow(32.0, alpha); }

MLEvalReport ml_series(cplx z, const MLParams& p, double tol) {
  validate(p);
  if (!(tol > 0.0)) throw Error("invalid-params", "tol must be positive");
  MLEvalReport rep;
  rep.branch = MLBranch::series;
  if (z == cplx(0.0, 0.0)) {
    rep.value = rgamma(p.beta);
    rep.terms_used = 1;
    return rep;
  }
  SeriesOutcome s = sum_series<long double>(z, p, tol);
  if (!resolved(s, Tier<long double>::to_double(Tier<long double>::eps()))) {
    s = sum_series<__float128>(z, p, tol);
    if (!resolved(s, static_cast<double>(FLT128_EPSILON))) s = sum_series<Float50>(z, p, tol);
  }
  rep.value = s.value;
  rep.terms_used = s.terms;
  rep.est_abs_error = s.tail + s.rounding;
  return rep;
}

MLEvalReport ml_asymptotic(cplx z, const MLParams& p, int m, double min_radius) {
  validate(p);
  if (m < 1) throw Error("invalid-params", "m must be >= 1");
  if (std::abs(z) < min_radius) throw Error("asymptotic-out-of-range");
  MLEvalReport rep;
  rep.branch = MLBranch::asymptotic;
  cplx sum = exponential_part(z, p);
  const double lz = std::log(std::abs(z)), az = std::arg(z);
  for (int j = 1; j <= m; ++j) sum -= algebraic_term(lz, az, p.beta - j * p.alpha, j);
  double rem = 0.0;
  for (int j = m + 1; j <= m + 3 && rem == 0.0; ++j) rem = std::abs(algebraic_term(lz, az, p.beta - j * p.alpha, j));
  rep.value = sum;
  rep.terms_used = m;
  rep.est_abs_error = rem + 4e-16 * std::abs(sum);
  return rep;
}

MLEvalReport ml_eval(cplx z, const MLParams& p, double rho) {
  validate(p);
  if (rho < 0.0) rho = switching_radius(p.alpha);
  if (std::abs(z) <= rho) return ml_series(z, p);
  // Optimal truncation on the envelope Gamma(j alpha - beta + 1) / |z|^j of the algebraic terms,
  // ignoring the oscillating sine factor of the reflected reciprocal gamma.
  const double lz = std::log(std::abs(z));
  double best = std::numeric_limits<double>::infinity();
  int m = 1;
  for (int j = 1; j <= 400; ++j) {
    const double x = j * p.alpha - p.beta + 1.0;
    const double env = (x > 0.0 ? std::lgamma(x) : 0.0) - j * lz;
    if (env < best) {
      best = env;
      m = j;
      if (env < -750.0) break;
    } else if (x > 2.0) {
      break;
    }
  }
  return ml_asymptotic(z, p, std::max(1, m - 1), 0.0);
}

cplx ml_scaled_derivative(cplx w, const MLParams& p, int m) {
  validate(p);
  if (m < 1) throw Error("invalid-params", "m must be >= 1");
  const double e = p.beta - m - 1;
  const MLParams q{p.alpha, p.beta - m};
  if (w == cplx(0.0, 0.0)) {
    if (e < 0.0) throw Error("singular-at-origin");
    return e == 0.0 ? cplx(rgamma(q.beta), 0.0) : cplx(0.0, 0.0);
  }
  return std::pow(w, e) * ml_eval(std::pow(w, p.alpha), q).value;
}

}  // namespace mlfrac
