#include "mlfrac/symbols.hpp"

#include <cmath>

namespace mlfrac {

SymbolKind parse_symbol_kind(const std::string& s) {
  if (s == "S") return SymbolKind::S;
  if (s == "Q") return SymbolKind::Q;
  if (s == "P") return SymbolKind::P;
  if (s == "M") return SymbolKind::M;
  if (s == "N") return SymbolKind::N;
  if (s == "L") return SymbolKind::L;
  if (s == "H") return SymbolKind::H;
  if (s == "S1") return SymbolKind::S1;
  throw Error("invalid-kind", s);
}

std::string to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::S: return "S";
    case SymbolKind::Q: return "Q";
    case SymbolKind::P: return "P";
    case SymbolKind::M: return "M";
    case SymbolKind::N: return "N";
    case SymbolKind::L: return "L";
    case SymbolKind::H: return "H";
    case SymbolKind::S1: return "S1";
  }
  return "?";
}

void SymbolSpec::validate() const {
  if (!(t >= 0.0)) throw Error("invalid-spec", "t must be >= 0");
  if (!(theta >= 0.0)) throw Error("invalid-spec", "theta must be >= 0");
  if (dim < 1) throw Error("invalid-spec", "dim must be positive");
  if (kind != SymbolKind::S1 && !(alpha > 1.0 && alpha < 2.0))
    throw Error("invalid-spec", "alpha must lie in (1, 2)");
}

double theta_threshold(SymbolKind kind, double alpha, int n) {
  const double r = n / alpha;
  switch (kind) {
    case SymbolKind::S: return r;
    case SymbolKind::Q: return r - 2.0 / alpha;
    case SymbolKind::P: return r + 2.0 / alpha - 2.0;
    case SymbolKind::M: return r + 2.0;
    case SymbolKind::N: return r + 2.0 - 2.0 / alpha;
    case SymbolKind::L: return r + 2.0 / alpha;
    case SymbolKind::S1: return n;
    case SymbolKind::H: break;
  }
  throw Error("invalid-kind", "no threshold for " + to_string(kind));
}

MLFactor ml_factor(const SymbolSpec& spec, double rho) {
  const double a = spec.alpha, t = spec.t, r2 = rho * rho;
  const cplx ima = i_pow(-a);
  MLFactor f{cplx(1.0, 0.0), 1.0, ima * std::pow(t, a) * r2};
  switch (spec.kind) {
    case SymbolKind::S: break;
    case SymbolKind::Q: f.prefactor = t; f.beta = 2.0; break;
    case SymbolKind::P: f.prefactor = ima * std::pow(t, a - 1); f.beta = a; break;
    case SymbolKind::M: f.prefactor = ima * r2; break;
    case SymbolKind::N:
      if (t == 0.0) throw Error("singular-time");
      f.prefactor = std::pow(t, 1 - a); f.beta = 2.0 - a; break;
    case SymbolKind::L: f.prefactor = ima * r2 * std::pow(t, a - 1); f.beta = a; break;
    case SymbolKind::H:
      if (t == 0.0) throw Error("singular-time");
      f.prefactor = ima * std::pow(t, a - 2); f.beta = a - 1; break;
    case SymbolKind::S1: throw Error("invalid-kind", "S1 has no Mittag-Leffler factor");
  }
  return f;
}

double bessel_factor(double theta, double rho) {
  return theta > 0.0 ? std::pow(1.0 + rho * rho, -theta / 2) : 1.0;
}

cplx symbol_radial(const SymbolSpec& spec, double rho) {
  spec.validate();
  cplx v;
  if (spec.kind == SymbolKind::S1) {
    v = std::polar(1.0, -rho * rho * spec.t);
  } else {
    const MLFactor f = ml_factor(spec, rho);
    v = f.prefactor == cplx(0.0, 0.0) ? cplx(0.0, 0.0) : f.prefactor * ml_eval(f.z, {spec.alpha, f.beta}).value;
  }
  return bessel_factor(spec.theta, rho) * v;
}

cplx symbol_eval(const SymbolSpec& spec, const Eigen::VectorXd& xi) {
  if (xi.size() != spec.dim) throw Error("invalid-spec", "xi length differs from dim");
  return symbol_radial(spec, xi.norm());
}

namespace {

cplx complex_prefactor(const SymbolSpec& spec, cplx rho, double& beta) {
  const double a = spec.alpha, t = spec.t;
  const MLFactor f = ml_factor(spec, 1.0);
  beta = f.beta;
  const cplx ima = i_pow(-a);
  switch (spec.kind) {
    case SymbolKind::M: return ima * rho * rho;
    case SymbolKind::L: return ima * rho * rho * std::pow(t, a - 1);
    default: return f.prefactor;
  }
}

cplx complex_bessel_factor(double theta, cplx rho) {
  return theta > 0.0 ? std::pow(1.0 + rho * rho, -theta / 2) : cplx(1.0, 0.0);
}

}  // namespace

cplx symbol_leading_amplitude(const SymbolSpec& spec, cplx rho) {
  const cplx b = complex_bessel_factor(spec.theta, rho);
  if (spec.kind == SymbolKind::S1) return b;
  double beta = 1.0;
  const cplx pre = complex_prefactor(spec, rho, beta);
  // With z = i^-a t^a rho^2 the principal root is z^(1/a) = -i t rho^(2/a).
  const cplx root = cplx(0.0, -spec.t) * std::pow(rho, 2.0 / spec.alpha);
  return b * pre / spec.alpha * std::pow(root, 1.0 - beta);
}

cplx symbol_leading(const SymbolSpec& spec, cplx rho) {
  const double a = spec.kind == SymbolKind::S1 ? 1.0 : spec.alpha;
  return symbol_leading_amplitude(spec, rho) * std::exp(cplx(0.0, -spec.t) * std::pow(rho, 2.0 / a));
}

cplx symbol_algebraic(const SymbolSpec& spec, cplx rho, int m) {
  if (spec.kind == SymbolKind::S1) return 0.0;
  double beta = 1.0;
  const cplx pre = complex_prefactor(spec, rho, beta);
  const cplx zinv = 1.0 / (i_pow(-spec.alpha) * std::pow(spec.t, spec.alpha) * rho * rho);
  cplx alg(0.0, 0.0), zp = zinv;
  for (int k = 1; k <= m; ++k) {
    alg += zp * rgamma(beta - k * spec.alpha);
    zp *= zinv;
  }
  return -complex_bessel_factor(spec.theta, rho) * pre * alg;
}

cplx symbol_large_xi(const SymbolSpec& spec, double rho, int m) {
  spec.validate();
  if (m < 1) throw Error("invalid-params", "m must be >= 1");
  if (spec.kind == SymbolKind::S1) return symbol_radial(spec, rho);
  if (spec.t * std::pow(rho, 2.0 / spec.alpha) < 10.0) throw Error("asymptotic-out-of-range", "t |xi|^(2/alpha) < 10");
  return symbol_leading(spec, rho) + symbol_algebraic(spec, rho, m);
}

TimeIdentityReport symbol_time_identity_check(double alpha, double rho, const TimeGrid& grid, int skip_nodes) {
  grid.validate();
  if (!grid.uniform) throw Error("nonuniform-grid");
  const Eigen::Index N = grid.nodes.size();
  if (N < 5) throw Error("grid-too-short");
  const double h = grid.step();
  SymbolSpec q{SymbolKind::Q, alpha, 0.0, 0.0, 1};
  SymbolSpec s = q, p = q;
  s.kind = SymbolKind::S;
  p.kind = SymbolKind::P;

  Eigen::VectorXcd Qv(N + 1);
  Qv(0) = 0.0;
  for (Eigen::Index j = 0; j < N; ++j) {
    q.t = grid.nodes(j);
    Qv(j + 1) = symbol_radial(q, rho);
  }

  TimeIdentityReport rep;
  // First derivative: central differences inside, second-order one-sided at the end.
  for (Eigen::Index j = 1; j <= N; ++j) {
    const cplx d = j < N ? (Qv(j + 1) - Qv(j - 1)) / (2 * h)
                         : (3.0 * Qv(N) - 4.0 * Qv(N - 1) + Qv(N - 2)) / (2 * h);
    s.t = grid.nodes(j - 1);
    rep.sup_first_derivative_gap = std::max(rep.sup_first_derivative_gap, std::abs(d - symbol_radial(s, rho)));
  }

  // Order 2 - alpha in (0, 1): derivative of the order alpha - 1 integral, Q(0) = 0.
  TimeSeries qs;
  qs.grid = grid;
  qs.values = Qv.tail(N);
  const TimeSeries I = rl_integral(qs, alpha - 1.0);
  Eigen::VectorXcd Iv(N + 1);
  Iv(0) = 0.0;
  Iv.tail(N) = I.values;
  const cplx ima = i_pow(-alpha);
  for (Eigen::Index j = 1 + skip_nodes; j <= N; ++j) {
    const cplx d = j < N ? (Iv(j + 1) - Iv(j - 1)) / (2 * h)
                         : (3.0 * Iv(N) - 4.0 * Iv(N - 1) + Iv(N - 2)) / (2 * h);
    p.t = grid.nodes(j - 1);
    const cplx pv = symbol_radial(p, rho);
    rep.sup_fractional_gap = std::max(rep.sup_fractional_gap, std::abs(ima * d - pv));
    rep.sup_fractional_gap_unscaled = std::max(rep.sup_fractional_gap_unscaled, std::abs(d - pv));
  }
  return rep;
}

namespace {

double predicted_power(SymbolKind kind, double alpha, int order) {
  const double g = (2.0 / alpha - 1.0) * order;
  switch (kind) {
    case SymbolKind::S: return g;
    case SymbolKind::Q: return g - 2.0 / alpha;
    case SymbolKind::P: return g - 2.0 * (alpha - 1.0) / alpha;
    default: break;
  }
  throw Error("invalid-kind", "derivative bounds cover S, Q, P");
}

}  // namespace

DerivativeProbeReport symbol_derivative_bound_probe(SymbolKind kind, double alpha, int order,
                                                    const std::vector<double>& xi_samples) {
  if (order < 0 || order > 2) throw Error("invalid-params", "order must be 0, 1 or 2");
  const double pw = predicted_power(kind, alpha, order);
  SymbolSpec spec{kind, alpha, 1.0, 0.0, 1};
  DerivativeProbeReport rep;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double xi : xi_samples) {
    // Step resolves the local oscillation frequency (2/alpha) xi^(2/alpha - 1).
    const double omega = std::max(1.0, 2.0 / alpha * std::pow(xi, 2.0 / alpha - 1.0));
    const double h = 1e-3 / omega;
    cplx d;
    if (order == 0) d = symbol_radial(spec, xi);
    else if (order == 1) d = (symbol_radial(spec, xi + h) - symbol_radial(spec, xi - h)) / (2 * h);
    else d = (symbol_radial(spec, xi + h) - 2.0 * symbol_radial(spec, xi) + symbol_radial(spec, xi - h)) / (h * h);
    const double r = std::abs(d) / std::pow(xi, pw);
    rep.xi.push_back(xi);
    rep.ratio.push_back(r);
    rep.sup_ratio = std::max(rep.sup_ratio, r);
    const double x = std::log(xi), y = std::log(r);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double n = static_cast<double>(xi_samples.size());
  if (n >= 2) rep.log_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

}  // namespace mlfrac
