#include "mlfrac/kernel_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include <quadmath.h>

#include "mlfrac/quadrature.hpp"

namespace mlfrac {

namespace {

constexpr double kSqrt2OverPi = 0.79788456080286535588;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr int kPanelNodes = 16;
constexpr double kDrop = 60.0;       // contour pieces stop where |exp(E)| has fallen by e^-60
constexpr double kRayEnd = 50.0;     // exp(-50) truncation of the vertical rays
constexpr double kSaddlePhase = 300; // smallest saddle phase handled by the saddle contour
const cplx kI(0.0, 1.0);

// H0^(1)(z) exp(-i z), for Re z > 0.
cplx hankel1_scaled(cplx z) {
  if (std::abs(z) >= 14.0) {
    cplx sum(1.0, 0.0), term(1.0, 0.0);
    double prev = 1.0;
    for (int k = 1; k < 60; ++k) {
      term *= kI * (-(2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * z);
      const double m = std::abs(term);
      if (m > prev) break;
      sum += term;
      prev = m;
      if (m < 1e-17) break;
    }
    return std::sqrt(2.0 / (M_PI * z)) * std::polar(1.0, -M_PI / 4) * sum;
  }
  const cplx q = z * z / 4.0;
  cplx term(1.0, 0.0), j0(1.0, 0.0), ysum(0.0, 0.0);
  double harmonic = 0.0;
  for (int k = 1; k < 120; ++k) {
    term *= -q / (double(k) * k);
    harmonic += 1.0 / k;
    j0 += term;
    ysum -= harmonic * term;
    if (std::abs(term) * harmonic < 1e-18 * std::abs(j0)) break;
  }
  const cplx y0 = (2.0 / M_PI) * ((std::log(z / 2.0) + kEulerGamma) * j0 + ysum);
  return (j0 + kI * y0) * std::exp(-kI * z);
}

cplx hankel2_scaled(cplx z) { return std::conj(hankel1_scaled(std::conj(z))); }

// Kernel weight w(r rho) = c_plus(rho) e^{i r rho} + c_minus(rho) e^{-i r rho}.
cplx weight_coefficient(int n, double r, cplx rho, int sign) {
  switch (n) {
    case 1: return 0.5 * kSqrt2OverPi;
    case 3: return double(sign) * kSqrt2OverPi * rho / (2.0 * kI * r);
    default: return 0.5 * rho * (sign > 0 ? hankel1_scaled(r * rho) : hankel2_scaled(r * rho));
  }
}

double weight_real(int n, double r, double rho) {
  switch (n) {
    case 1: return kSqrt2OverPi * std::cos(r * rho);
    case 3: return kSqrt2OverPi * rho * std::sin(r * rho) / r;
    default: return rho * std::cyl_bessel_j(0.0, r * rho);
  }
}

double surface_measure(int n) { return n == 1 ? 2.0 : (n == 2 ? 2.0 * M_PI : 4.0 * M_PI); }

// a w - w^a - (a - 1) and its derivative at w = 1 + delta, by binomial series near the saddle.
void saddle_phase(double a, cplx delta, cplx& D, cplx& dD) {
  if (std::abs(delta) < 0.5) {
    cplx pw = delta;  // delta^k
    double c = a;     // binom(a, k)
    double c1 = 1.0;  // binom(a - 1, k - 1)
    D = 0.0;
    dD = 0.0;
    for (int k = 1; k < 200; ++k) {
      if (k >= 2) {
        c *= (a - k + 1) / k;
        D -= c * pw;
      }
      c1 = (k == 1) ? (a - 1) : c1 * (a - k) / k;
      dD -= a * c1 * pw;
      pw *= delta;
      if (k >= 2 && std::abs(pw) * (std::abs(c) + a * std::abs(c1) + 1.0) < 1e-18 * (std::abs(D) + std::abs(dD))) break;
    }
    return;
  }
  const cplx w = 1.0 + delta;
  D = a * w - std::pow(w, a) - (a - 1.0);
  dD = a - a * std::pow(w, a - 1.0);
}

class RadialInverter {
 public:
  RadialInverter(const SymbolSpec& spec, const KernelOptions& opts) : spec_(spec), opts_(opts) {
    alpha_ = spec.kind == SymbolKind::S1 ? 1.0 : spec.alpha;
    a_ = 2.0 / alpha_;
    choose_cut();
    build_panels();
  }

  void invert(double r, cplx& value, double& err, bool& ok) const {
    value = 0.0;
    err = 0.0;
    ok = true;
    real_axis(r, value, err);
    if (alg_terms_ > 0) {
      for (int sign : {1, -1}) add(tail_ray(r, sign), value, err, ok);
    }
    add(lead_minus(r), value, err, ok);
    add(lead_plus(r), value, err, ok);
    err += 1e-16 * std::abs(value) + std::numeric_limits<double>::min();
  }

 private:
  static void add(const QuadResult& q, cplx& value, double& err, bool& ok) {
    value += q.value;
    err += q.error;
    ok = ok && q.converged;
  }

  void choose_cut() {
    if (spec_.kind == SymbolKind::S1) {
      cut_ = 1.0;
      alg_terms_ = 0;
      return;
    }
    // Beyond the cut the next exponential branch of E_{alpha,beta} is below e^-42.
    const double kappa = std::max(0.05, -std::cos(-M_PI / 2 + 2 * M_PI / alpha_));
    const double X = std::max(32.0, 42.0 / kappa);
    cut_ = std::max(1.0, std::pow(X / spec_.t, alpha_ / 2));
    const double beta = ml_factor(spec_, 1.0).beta;
    const double logz = alpha_ * std::log(X);
    double best = std::numeric_limits<double>::infinity();
    alg_terms_ = 1;
    for (int k = 1; k <= 60; ++k) {
      const double g = std::abs(rgamma(beta - k * alpha_));
      if (g == 0.0) continue;
      const double lm = std::log(g) - k * logz;
      if (lm < best) {
        best = lm;
        alg_terms_ = k;
      } else if (lm > best + 2.0) {
        break;
      }
      if (lm < -40.0 * std::log(10.0)) break;
    }
  }

  void build_panels() {
    // At most about two radians of symbol phase per panel.
    const double freq = spec_.t * a_ * std::pow(cut_, a_ - 1.0);
    const double w = std::min(opts_.panel_width, 2.0 / freq);
    edges_.clear();
    const int low = std::max(1, static_cast<int>(std::ceil(1.0 / w - 1e-12)));
    for (int i = 0; i <= low; ++i) edges_.push_back(double(i) / low);
    const int high = static_cast<int>(std::ceil((cut_ - 1.0) / w - 1e-12));
    for (int i = 1; i <= high; ++i) edges_.push_back(1.0 + (cut_ - 1.0) * i / high);
    const GaussRule& g = gauss_legendre(kPanelNodes);
    const size_t np = edges_.size() - 1;
    samples_.assign(np * kPanelNodes, 0.0);
    interp_err_.assign(np, 0.0);
    std::vector<std::vector<double>> legendre(kPanelNodes, std::vector<double>(2));
    for (int j = 0; j < kPanelNodes; ++j) {
      double p0 = 1.0, p1 = g.x[j];
      for (int k = 2; k < kPanelNodes; ++k) {
        const double p2 = ((2 * k - 1) * g.x[j] * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      legendre[j][0] = p0;  // P_14
      legendre[j][1] = p1;  // P_15
    }
    parallel_for(static_cast<int>(np), opts_.threads, [&](int p) {
      const double lo = edges_[p], hi = edges_[p + 1];
      const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
      cplx c14(0.0, 0.0), c15(0.0, 0.0);
      for (int j = 0; j < kPanelNodes; ++j) {
        const double rho = c + h * g.x[j];
        cplx v = symbol_radial(spec_, rho);
        if (lo >= 1.0) v -= symbol_leading(spec_, rho);
        samples_[p * kPanelNodes + j] = v;
        c14 += g.w[j] * v * legendre[j][0];
        c15 += g.w[j] * v * legendre[j][1];
      }
      interp_err_[p] = 2.0 * h * (14.5 * std::abs(c14) + 15.5 * std::abs(c15));
    });
  }

  void real_axis(double r, cplx& value, double& err) const {
    const GaussRule& g = gauss_legendre(kPanelNodes);
    for (size_t p = 0; p + 1 < edges_.size(); ++p) {
      const double lo = edges_[p], hi = edges_[p + 1];
      const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
      const cplx* s = &samples_[p * kPanelNodes];
      int m = kPanelNodes;
      if (r * 2 * h > 2.0) m = 8 * static_cast<int>(std::ceil((kPanelNodes + 1.25 * r * 2 * h) / 8.0));
      cplx sum(0.0, 0.0);
      double wmax = 0.0;
      if (m == kPanelNodes) {
        for (int j = 0; j < m; ++j) {
          const double wr = weight_real(spec_.dim, r, c + h * g.x[j]);
          sum += g.w[j] * wr * s[j];
          wmax = std::max(wmax, std::abs(wr));
        }
      } else {
        const GaussRule& f = gauss_legendre(m);
        for (int k = 0; k < m; ++k) {
          const double y = f.x[k];
          cplx num(0.0, 0.0);
          double den = 0.0;
          bool hit = false;
          for (int j = 0; j < kPanelNodes; ++j) {
            const double dy = y - g.x[j];
            if (dy == 0.0) {
              num = s[j];
              den = 1.0;
              hit = true;
              break;
            }
            const double q = g.bary[j] / dy;
            num += q * s[j];
            den += q;
          }
          const cplx v = hit ? num : num / den;
          const double wr = weight_real(spec_.dim, r, c + h * y);
          sum += f.w[k] * wr * v;
          wmax = std::max(wmax, std::abs(wr));
        }
      }
      value += h * sum;
      err += interp_err_[p] * std::max(wmax, 1e-300);
    }
  }

  // Algebraic corrections beyond the cut, on the ray cut +- i s.
  QuadResult tail_ray(double r, int sign) const {
    const double P = cut_;
    const int n = spec_.dim;
    const cplx phase = std::polar(1.0, sign * r * P);
    auto f = [&](double sigma) -> cplx {
      const cplx rho(P, sign * sigma / r);
      return weight_coefficient(n, r, rho, sign) * symbol_algebraic(spec_, rho, alg_terms_) * phase *
             std::exp(-sigma) * (double(sign) * kI / r);
    };
    std::vector<double> breaks{0.0};
    for (double b = std::min(1.0, r * P) / 16; b < 1.0; b *= 2) breaks.push_back(b);
    for (double b = 1.0; b <= kRayEnd; b += 1.0) breaks.push_back(b);
    return integrate_adaptive(f, breaks, opts_.rel_tol, 0.0);
  }

  // Exponent i(sign r rho - t rho^a) of the leading term times e^{sign i r rho}.
  cplx exponent(double r, int sign, cplx rho) const {
    return kI * (sign * r * rho - spec_.t * std::pow(rho, a_));
  }

  cplx integrand(double r, int sign, cplx rho) const {
    return weight_coefficient(spec_.dim, r, rho, sign) * symbol_leading_amplitude(spec_, rho);
  }

  // Straight segment from za to zb.
  QuadResult segment(double r, int sign, cplx za, cplx zb, int pieces) const {
    const cplx dz = zb - za;
    auto f = [&](double tau) -> cplx {
      const cplx rho = za + tau * dz;
      const cplx e = std::exp(exponent(r, sign, rho));
      return e == 0.0 ? cplx(0.0, 0.0) : integrand(r, sign, rho) * e * dz;
    };
    // Segments lying deep in a valley are dropped; their phase can run through 1e10 cycles.
    const double scale = std::abs(integrand(r, sign, 1.0));
    double peak = 0.0;
    for (int i = 0; i <= 64; ++i) peak = std::max(peak, std::abs(f(i / 64.0)));
    if (peak < 1e-20 * scale) return QuadResult{cplx(0.0, 0.0), peak, true, 0};
    std::vector<double> breaks;
    for (int i = 0; i <= pieces; ++i) breaks.push_back(double(i) / pieces);
    return integrate_adaptive(f, breaks, opts_.rel_tol, 0.0);
  }

  // Length along z0 + s dir at which Re E has dropped by kDrop below its value at z0.
  double decay_length(double r, int sign, cplx z0, cplx dir) const {
    const double e0 = exponent(r, sign, z0).real();
    double s = 1.0 / (std::abs(r) + spec_.t * a_ + 1.0);
    for (int k = 0; k < 200; ++k, s *= 1.5)
      if (exponent(r, sign, z0 + s * dir).real() - e0 < -kDrop) return s;
    return std::numeric_limits<double>::infinity();
  }

  // Ray z0 + s e^{-i pi/4}, s >= 0, into the lower valley.
  QuadResult ray(double r, int sign, cplx z0) const {
    const cplx dir = std::polar(1.0, -M_PI / 4);
    const double S = decay_length(r, sign, z0, dir);
    if (!std::isfinite(S)) return QuadResult{cplx(0.0, 0.0), std::numeric_limits<double>::infinity(), false, 0};
    return segment(r, sign, z0, z0 + S * dir, 32);
  }

  QuadResult lead_minus(double r) const { return ray(r, -1, 1.0); }

  static void accumulate(QuadResult& into, const QuadResult& q) {
    into.value += q.value;
    into.error += q.error;
    into.converged = into.converged && q.converged;
    into.panels += q.panels;
  }

  QuadResult lead_plus(double r) const {
    const double a = a_, t = spec_.t;
    const double rho_s = std::pow(r / (t * a), 1.0 / (a - 1.0));
    if (rho_s <= 0.5) return ray(r, 1, 1.0);
    const double T = t * std::pow(rho_s, a);
    const double psi_s = T * (a - 1.0);
    const double curv = T * a * (a - 1.0) / (rho_s * rho_s);  // |psi''(rho*)|
    if (psi_s - (r - t) >= kSaddlePhase && rho_s >= 2.0) {
      QuadResult q = saddle_contour(r, rho_s, T);
      if (q.converged) return q;
    }
    // Real axis through the saddle, then the ray beyond it.
    const double rho_e = std::max(rho_s, 1.0) + std::max(1.0, std::sqrt(20.0 / curv));
    auto psi = [&](double x) { return r * x - t * std::pow(x, a); };
    const double variation = std::abs(psi(std::max(rho_s, 1.0)) - psi(1.0)) + std::abs(psi(std::max(rho_s, 1.0)) - psi(rho_e));
    if (variation > 1e6) return QuadResult{cplx(0.0, 0.0), std::numeric_limits<double>::infinity(), false, 0};
    const int panels = 4 + static_cast<int>(std::ceil(variation / 3.0));
    std::vector<double> breaks;
    for (int i = 0; i <= panels; ++i) breaks.push_back(1.0 + (rho_e - 1.0) * i / panels);
    auto f = [&](double x) -> cplx { return integrand(r, 1, x) * std::polar(1.0, psi(x)); };
    QuadResult q = integrate_adaptive(f, breaks, opts_.rel_tol, 0.0, 4 * panels + 4000);
    accumulate(q, ray(r, 1, rho_e));
    return q;
  }

  // 1 -> 1 + iY -> upper end of the saddle line -> saddle -> ray into the lower valley.
  QuadResult saddle_contour(double r, double rho_s, double T) const {
    const double a = a_;
    const cplx up(0.0, 1.0);
    const double Y = decay_length(r, 1, 1.0, up);
    const QuadResult fail{cplx(0.0, 0.0), std::numeric_limits<double>::infinity(), false, 0};
    if (!std::isfinite(Y)) return fail;
    // Saddle line w = 1 + s e^{-i pi/4} in units of rho*, with E - E* = i T D(w) evaluated without cancellation.
    const cplx dir = std::polar(1.0, -M_PI / 4);
    auto drop = [&](double s) {
      cplx D, dD;
      saddle_phase(a, s * dir, D, dD);
      return (kI * T * D).real();
    };
    double s_up = std::sqrt(2.0 * kDrop / (T * a * (a - 1.0)));
    double s_dn = s_up;
    while (drop(-s_up) > -kDrop && s_up < 2.0) s_up *= 1.25;
    while (drop(s_dn) > -kDrop && s_dn < 1e6) s_dn *= 1.25;
    const cplx w_up = 1.0 - s_up * dir;
    if (rho_s * w_up.real() < 0.5 || drop(-s_up) > -kDrop || drop(s_dn) > -kDrop) return fail;
    if (spec_.theta > 0.0 && std::abs(rho_s * w_up - kI) < 0.5) return fail;

    QuadResult q = segment(r, 1, 1.0, cplx(1.0, Y), 16);
    accumulate(q, segment(r, 1, cplx(1.0, Y), rho_s * w_up, 16));
    // Phase at the saddle reduced in quad precision; psi_s reaches 1e12 and beyond in fit windows.
    const __float128 rq = r, pq = rho_s;
    const __float128 psi_q = rq * pq - __float128(spec_.t) * powq(pq, __float128(a));
    const cplx phase = std::polar(1.0, static_cast<double>(fmodq(psi_q, 2 * M_PIq)));
    auto f = [&](double s) -> cplx {
      const cplx w = 1.0 + s * dir;
      cplx D, dD;
      saddle_phase(a, s * dir, D, dD);
      const cplx e = std::exp(kI * T * D);
      if (e == 0.0) return 0.0;
      const cplx rho = rho_s * w;
      return integrand(r, 1, rho) * phase * e * rho_s * dir;
    };
    std::vector<double> breaks;
    const int pieces = 24;
    for (int i = 0; i <= pieces; ++i) breaks.push_back(-s_up + (s_up + s_dn) * i / pieces);
    accumulate(q, integrate_adaptive(f, breaks, opts_.rel_tol, 0.0));
    accumulate(q, ray(r, 1, rho_s * (1.0 + s_dn * dir)));
    return q;
  }

  SymbolSpec spec_;
  KernelOptions opts_;
  double alpha_ = 1.0, a_ = 2.0;
  double cut_ = 1.0;
  int alg_terms_ = 0;
  std::vector<double> edges_;
  std::vector<cplx> samples_;
  std::vector<double> interp_err_;
};

void check_radii(const Eigen::VectorXd& radii) {
  for (Eigen::Index i = 0; i < radii.size(); ++i) {
    if (!(radii(i) > 0.0) || !std::isfinite(radii(i))) throw Error("invalid-radii", "radii must be positive");
    if (i > 0 && !(radii(i) > radii(i - 1))) throw Error("invalid-radii", "radii must be strictly increasing");
  }
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y, double* intercept = nullptr,
                           double* rms = nullptr) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double b = my - slope * mx;
  if (intercept) *intercept = b;
  if (rms) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += std::pow(y[i] - (b + slope * x[i]), 2);
    *rms = std::sqrt(s / n);
  }
  return slope;
}

}  // namespace

void KernelSample::validate() const {
  check_radii(radii);
  if (values.size() != radii.size() || quad_error.size() != radii.size())
    throw Error("invalid-sample", "values and errors must match radii");
  for (Eigen::Index i = 0; i < quad_error.size(); ++i)
    if (!(quad_error(i) > 0.0) || !std::isfinite(quad_error(i)))
      throw Error("invalid-sample", "quad_error must be finite and positive");
}

KernelSample kernel_invert(const SymbolSpec& spec, const Eigen::VectorXd& radii, const KernelOptions& opts) {
  if (spec.dim < 1 || spec.dim > 3) throw Error("unsupported-dimension", "dim must be 1, 2 or 3");
  spec.validate();
  if (!(spec.t > 0.0)) throw Error("invalid-spec", "kernel inversion needs t > 0");
  if (!(opts.panel_width > 0.0)) throw Error("invalid-params", "panel_width must be positive");
  check_radii(radii);
  const RadialInverter inv(spec, opts);
  KernelSample s;
  s.spec = spec;
  s.radii = radii;
  const int n = static_cast<int>(radii.size());
  s.values.resize(n);
  s.quad_error.resize(n);
  std::vector<char> ok(n, 1);
  parallel_for(n, opts.threads, [&](int i) {
    cplx v;
    double e;
    bool c;
    inv.invert(radii(i), v, e, c);
    s.values(i) = v;
    s.quad_error(i) = e;
    ok[i] = c && std::isfinite(std::abs(v));
  });
  s.converged.assign(ok.begin(), ok.end());
  return s;
}

KernelSample bessel_kernel_G(double theta, int n, const Eigen::VectorXd& radii) {
  if (!(theta > 0.0)) throw Error("invalid-params", "theta must be positive");
  if (n < 1 || n > 3) throw Error("unsupported-dimension", "dim must be 1, 2 or 3");
  check_radii(radii);
  KernelSample s;
  s.spec = SymbolSpec{SymbolKind::S, 1.5, 0.0, theta, n};
  s.radii = radii;
  s.values.resize(radii.size());
  s.quad_error.resize(radii.size());
  s.converged.assign(radii.size(), true);
  // G = 2^(n/2 - theta) / Gamma(theta/2) * int_0^inf exp(-r^2/s - s/4) s^((theta-n)/2) ds/s, with s = r e^u.
  const double lc = (n / 2.0 - theta) * std::log(2.0) - std::lgamma(theta / 2);
  const double e = (theta - n) / 2;
  for (Eigen::Index i = 0; i < radii.size(); ++i) {
    const double r = radii(i);
    auto f = [&](double u) -> cplx {
      return std::exp(lc - r * std::exp(-u) - r * std::exp(u) / 4 + e * (std::log(r) + u));
    };
    const double lo = std::log(r / 400.0) - 2.0;
    const double hi = std::log((800.0 + 40.0 * std::abs(e)) / r) + 2.0;
    std::vector<double> breaks;
    for (double b = lo; b < hi; b += 1.0) breaks.push_back(b);
    breaks.push_back(hi);
    const QuadResult q = integrate_adaptive(f, breaks, 1e-13, 0.0);
    s.values(i) = q.value.real();
    s.quad_error(i) = q.error + std::numeric_limits<double>::min();
    s.converged[i] = q.converged;
  }
  return s;
}

double saddle_frequency(const SymbolSpec& spec, double r) {
  const double alpha = spec.kind == SymbolKind::S1 ? 1.0 : spec.alpha;
  const double a = 2.0 / alpha;
  return std::pow(r / (spec.t * a), 1.0 / (a - 1.0));
}

double radius_for_saddle_phase(const SymbolSpec& spec, double psi) {
  const double alpha = spec.kind == SymbolKind::S1 ? 1.0 : spec.alpha;
  const double a = 2.0 / alpha;
  const double rho = std::pow(psi / (spec.t * (a - 1.0)), 1.0 / a);
  return spec.t * a * std::pow(rho, a - 1.0);
}

double decay_exponent(SymbolKind kind, double alpha, double theta, int n) {
  if (kind == SymbolKind::S1) return -theta;
  const double d = 2.0 - alpha, base = n * alpha - n - alpha * theta;
  switch (kind) {
    case SymbolKind::S: return base / d;
    case SymbolKind::Q: return (base - 2.0) / d;
    case SymbolKind::P: return (base + 2.0 - 2.0 * alpha) / d;
    case SymbolKind::M: return (base + 2.0 * alpha) / d;
    case SymbolKind::N: return (base + 2.0 * (alpha - 1.0)) / d;
    case SymbolKind::L: return (base + 2.0) / d;
    case SymbolKind::H: return (base + 4.0 - 2.0 * alpha) / d;
    default: return base / d;
  }
}

double phase_exponent(double alpha) { return 2.0 / (2.0 - alpha); }

std::pair<double, double> fit_window(const SymbolSpec& spec) {
  double r0 = radius_for_saddle_phase(spec, 1e3);
  const double q = spec.kind == SymbolKind::S1 ? 2.0 : phase_exponent(spec.alpha);
  if (spec.theta > 0.0) {
    const double p = decay_exponent(spec.kind, spec.alpha, spec.theta, spec.dim);
    const double scale = std::pow(spec.t, spec.alpha / 2);
    while (r0 + p * std::log(r0 / scale) < std::log(1e4)) r0 *= 1.05;
  }
  return {r0, r0 * std::pow(100.0, 1.0 / q)};
}

Eigen::VectorXd fit_radii(const SymbolSpec& spec, double r_min, double r_max, int pairs) {
  if (!(r_min > 0.0 && r_max > r_min) || pairs < 2) throw Error("invalid-params", "need 0 < r_min < r_max, pairs >= 2");
  std::vector<double> r;
  for (int j = 0; j < pairs; ++j) {
    const double x = r_min * std::pow(r_max / r_min, double(j) / (pairs - 1));
    const double step = (M_PI / 4) / saddle_frequency(spec, x);
    r.push_back(x);
    r.push_back(x + std::min(step, 1e-3 * x));
  }
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return Eigen::Map<Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));
}

AsymptoticLaw fit_asymptotic_law(const KernelSample& sample) {
  sample.validate();
  const Eigen::Index J = sample.radii.size();
  for (Eigen::Index j = 0; j < J; ++j)
    if (!sample.converged[j] || !(sample.quad_error(j) < 1e-3 * std::abs(sample.values(j))))
      throw Error("unresolved-kernel", "quadrature error exceeds 1e-3 of |K| at r = " + std::to_string(sample.radii(j)));
  std::vector<double> lr, la;
  for (Eigen::Index j = 0; j < J; ++j) {
    const double m = std::abs(sample.values(j));
    if (m > 0.0 && std::isfinite(m)) {
      lr.push_back(std::log(sample.radii(j)));
      la.push_back(std::log(m));
    }
  }
  if (lr.size() < 3) throw Error("insufficient-oscillations", "too few nonzero samples");
  AsymptoticLaw law;
  double b0 = 0.0;
  law.p = least_squares_slope(lr, la, &b0, &law.residual);
  law.A = std::exp(b0);
  law.r_min = sample.radii(0);
  law.r_max = sample.radii(J - 1);

  // Local phase rates from closely spaced neighbours.
  std::vector<double> lm, lrate;
  double sign = 0.0;
  for (Eigen::Index j = 0; j + 1 < J; ++j) {
    const double r0 = sample.radii(j), r1 = sample.radii(j + 1);
    if (r1 - r0 > 2e-3 * r0) continue;
    const double dphi = std::arg(sample.values(j + 1) * std::conj(sample.values(j)));
    if (std::abs(dphi) > 2.0 || dphi == 0.0) continue;
    const double rate = dphi / (r1 - r0);
    sign += rate > 0 ? 1.0 : -1.0;
    lm.push_back(std::log(0.5 * (r0 + r1)));
    lrate.push_back(std::log(std::abs(rate)));
  }
  if (lm.size() < 3) throw Error("insufficient-oscillations", "fewer than 3 resolved phase rates");
  double bq = 0.0;
  law.q = least_squares_slope(lm, lrate, &bq) + 1.0;
  const double absB = std::exp(bq) / law.q;
  // Phase modelled as -B r^q + c.
  law.B = sign > 0 ? -absB : absB;
  law.oscillations = absB * std::abs(std::pow(law.r_max, law.q) - std::pow(law.r_min, law.q)) / (2 * M_PI);
  if (law.oscillations < 5.0) throw Error("insufficient-oscillations", "fewer than 5 phase cycles in the window");
  double cs = 0.0, sn = 0.0;
  for (Eigen::Index j = 0; j < J; ++j) {
    const double c = std::arg(sample.values(j)) + std::fmod(law.B * std::pow(sample.radii(j), law.q), 2 * M_PI);
    cs += std::cos(c);
    sn += std::sin(c);
  }
  law.c = std::atan2(sn, cs);
  return law;
}

std::string to_string(SmallXRegime r) {
  switch (r) {
    case SmallXRegime::bounded: return "bounded";
    case SmallXRegime::log: return "log";
    default: return "power";
  }
}

SmallXRegime predicted_small_x_regime(SymbolKind kind, double theta, int n, double* power) {
  // Critical theta at which the first nonvanishing algebraic term of the symbol becomes |xi|^-n.
  double crit = n - 2.0, shift = 2.0;
  switch (kind) {
    case SymbolKind::P:
    case SymbolKind::H: crit = n - 4.0; shift = 4.0; break;
    case SymbolKind::M: crit = n; shift = 0.0; break;
    case SymbolKind::S1:
      if (power) *power = 0.0;
      return SmallXRegime::bounded;
    default: break;
  }
  if (power) *power = shift + theta - n;
  if (std::abs(theta - crit) < 1e-12) return SmallXRegime::log;
  return theta > crit ? SmallXRegime::bounded : SmallXRegime::power;
}

SmallXReport small_x_behavior(const SymbolSpec& spec, const std::vector<double>& radii, const KernelOptions& opts) {
  if (radii.size() < 3) throw Error("invalid-params", "need at least 3 radii");
  std::vector<double> r = radii;
  std::sort(r.begin(), r.end());
  const KernelSample s = kernel_invert(spec, Eigen::Map<const Eigen::VectorXd>(r.data(), r.size()), opts);
  SmallXReport rep;
  rep.radii = r;
  rep.predicted = predicted_small_x_regime(spec.kind, spec.theta, spec.dim, &rep.predicted_power);
  for (Eigen::Index i = 0; i < s.values.size(); ++i) rep.abs_values.push_back(std::abs(s.values(i)));
  // Increments per unit log r between the three smallest radii.
  auto incr = [&](int i) { return std::abs(s.values(i + 1) - s.values(i)) / std::log(r[i + 1] / r[i]); };
  const double d0 = incr(0), d1 = incr(1);
  rep.growth_ratio = d1 > 0.0 ? d0 / d1 : std::numeric_limits<double>::infinity();
  const double per_decade = std::pow(rep.growth_ratio, std::log(10.0) / std::log(r[1] / r[0]));
  std::vector<double> lx, ly;
  for (int i = 0; i < 3; ++i) {
    lx.push_back(std::log(r[i]));
    ly.push_back(std::log(rep.abs_values[i]));
  }
  rep.observed_power = least_squares_slope(lx, ly);
  if (per_decade < 0.6)
    rep.observed = SmallXRegime::bounded;
  else if (per_decade < 2.0)
    rep.observed = SmallXRegime::log;
  else
    rep.observed = SmallXRegime::power;
  rep.matches = rep.observed == rep.predicted;
  return rep;
}

ThresholdScanReport l1_threshold_scan(SymbolKind kind, double alpha, int n, const std::vector<double>& theta_list,
                                      double r_max, const KernelOptions& opts) {
  if (theta_list.size() < 2) throw Error("invalid-params", "need at least two theta values");
  ThresholdScanReport rep;
  rep.predicted = theta_threshold(kind, alpha, n);
  std::vector<double> thetas = theta_list;
  std::sort(thetas.begin(), thetas.end());
  const double r_lo = r_max / 16.0;
  const int points = 33;
  Eigen::VectorXd radii(points);
  for (int i = 0; i < points; ++i) radii(i) = r_lo * std::pow(16.0, double(i) / (points - 1));
  for (double th : thetas) {
    SymbolSpec spec{kind, alpha, 1.0, th, n};
    const KernelSample s = kernel_invert(spec, radii, opts);
    // Unconverged radii are left out of the fit.
    std::vector<double> lx, ly;
    for (int i = 0; i < points; ++i) {
      if (!s.converged[i]) continue;
      lx.push_back(std::log(radii(i)));
      ly.push_back(std::log(std::abs(s.values(i))) + n * std::log(radii(i)));
    }
    ThresholdEntry e;
    e.theta = th;
    if (4 * lx.size() < 3 * static_cast<size_t>(points)) {
      e.tail_slope = NAN;
      e.verdict = "inconclusive";
    } else {
      e.tail_slope = least_squares_slope(lx, ly);
      e.verdict = e.tail_slope < -0.05 ? "convergent" : (e.tail_slope > 0.05 ? "divergent" : "inconclusive");
    }
    rep.entries.push_back(e);
  }
  for (size_t i = 0; i + 1 < rep.entries.size(); ++i) {
    const auto& lo = rep.entries[i];
    const auto& hi = rep.entries[i + 1];
    if (std::isnan(lo.tail_slope) || std::isnan(hi.tail_slope)) continue;
    if (lo.tail_slope >= 0.0 && hi.tail_slope < 0.0) {
      rep.empirical = lo.theta + (hi.theta - lo.theta) * lo.tail_slope / (lo.tail_slope - hi.tail_slope);
      rep.conclusive = true;
      break;
    }
  }
  return rep;
}

double bound_sigma(SymbolKind kind, double alpha, double theta, int n) {
  switch (kind) {
    case SymbolKind::S: return (theta * alpha - n) / (2.0 - alpha);
    case SymbolKind::Q: return (theta * alpha + 2.0 - n) / (2.0 - alpha);
    case SymbolKind::P: return (theta * alpha + 2.0 * alpha - 2.0 - n) / (2.0 - alpha);
    default: throw Error("invalid-kind", "piecewise bounds are defined for S, Q and P");
  }
}

double piecewise_bound(SymbolKind kind, double alpha, double theta, int n, double t, double r) {
  const double sigma = bound_sigma(kind, alpha, theta, n);
  double e = theta - n;
  if (kind == SymbolKind::Q) e += 2.0 / alpha;
  if (kind == SymbolKind::P) e += 2.0 - 2.0 / alpha;
  const double rt = std::pow(t, alpha / 2);
  if (r <= rt) return std::max(1.0, std::pow(r, e));
  if (t < 1.0) return r <= 1.0 ? std::max(1.0, std::pow(t, alpha / 2 * e)) : std::pow(r, -n - sigma);
  return std::pow(t, alpha / 2 * (theta + sigma)) * std::pow(r, -n - sigma);
}

BoundReport piecewise_bound_check(SymbolKind kind, double alpha, double theta, int n, const std::vector<double>& t_list,
                                  const std::vector<double>& radii, const KernelOptions& opts) {
  BoundReport rep;
  rep.sigma = bound_sigma(kind, alpha, theta, n);
  if (!(theta > theta_threshold(kind, alpha, n))) throw Error("invalid-params", "theta must exceed the L1 threshold");
  std::vector<double> r = radii;
  std::sort(r.begin(), r.end());
  const Eigen::Map<const Eigen::VectorXd> rv(r.data(), r.size());
  for (double t : t_list) {
    const KernelSample s = kernel_invert(SymbolSpec{kind, alpha, t, theta, n}, rv, opts);
    for (size_t i = 0; i < r.size(); ++i) {
      BoundRow row;
      row.t = t;
      row.r = r[i];
      row.value = std::abs(s.values(i));
      row.bound = piecewise_bound(kind, alpha, theta, n, t, r[i]);
      row.ratio = row.value / row.bound;
      rep.max_ratio = std::max(rep.max_ratio, row.ratio);
      rep.rows.push_back(row);
    }
  }
  rep.finite = std::isfinite(rep.max_ratio);
  return rep;
}

double bound_tail_mass(int n, double sigma, double C, double R) {
  return surface_measure(n) * C * std::pow(R - 1.0, -sigma) / sigma;
}

MismatchReport mismatch_radius(SymbolKind kind, double alpha, double theta, int n, double delta,
                               const KernelOptions& opts) {
  if (!(delta > 0.0)) throw Error("invalid-params", "delta must be positive");
  MismatchReport rep;
  rep.sigma = bound_sigma(kind, alpha, theta, n);
  if (!(rep.sigma > 0.0)) throw Error("invalid-params", "theta must exceed the L1 threshold");
  // Uniform constant of the dominating bound over 0 < t < 1 and |x| >= 1.
  const std::vector<double> ts{0.05, 0.1, 0.25, 0.5, 0.75, 0.95};
  std::vector<double> r;
  for (double x = 1.0; x <= 64.0 * 1.0001; x *= std::pow(2.0, 0.25)) r.push_back(x);
  const BoundReport b = piecewise_bound_check(kind, alpha, theta, n, ts, r, opts);
  rep.constant = b.max_ratio;
  double best = std::numeric_limits<double>::infinity();
  for (double R = 2.0; R <= 1e9; R *= 1.05) {
    const double tail = bound_tail_mass(n, rep.sigma, rep.constant, R);
    best = std::min(best, tail);
    if (tail <= delta) {
      rep.radius = R;
      rep.tail = tail;
      return rep;
    }
  }
  throw Error("mismatch-unreachable", "smallest tail bound reached: " + std::to_string(best));
}

double direct_tail_mass(const SymbolSpec& spec, double R, double r_far, const KernelOptions& opts) {
  const double r0 = R - 1.0;
  if (!(r0 > 0.0 && r_far > r0)) throw Error("invalid-params", "need 1 < R and R - 1 < r_far");
  const int per_octave = 16;
  const int m = std::max(8, static_cast<int>(std::ceil(per_octave * std::log2(r_far / r0))));
  Eigen::VectorXd radii(m + 1);
  for (int i = 0; i <= m; ++i) radii(i) = r0 * std::pow(r_far / r0, double(i) / m);
  const KernelSample s = kernel_invert(spec, radii, opts);
  const int n = spec.dim;
  // Trapezoid in log r of |K| r^n.
  double mass = 0.0;
  for (int i = 0; i < m; ++i) {
    const double f0 = std::abs(s.values(i)) * std::pow(radii(i), n);
    const double f1 = std::abs(s.values(i + 1)) * std::pow(radii(i + 1), n);
    mass += 0.5 * (f0 + f1) * std::log(radii(i + 1) / radii(i));
  }
  // Power-law extrapolation from the last octave.
  const int k = std::max(0, m - per_octave);
  const double slope = std::log(std::abs(s.values(m)) / std::abs(s.values(k))) / std::log(radii(m) / radii(k));
  const double ex = slope + n;
  if (ex < 0.0) mass += std::abs(s.values(m)) * std::pow(radii(m), n) / (-ex);
  else mass = std::numeric_limits<double>::infinity();
  return surface_measure(n) * mass;
}

}  // namespace mlfrac
