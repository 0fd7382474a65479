#include "mlfrac/holder_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "mlfrac/quadrature.hpp"

namespace mlfrac {

namespace {

const cplx I(0.0, 1.0);

// Multi-indices of order k in dim variables.
std::vector<std::vector<int>> multi_indices(int dim, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> g(dim, 0);
  std::function<void(int, int)> rec = [&](int axis, int left) {
    if (axis == dim - 1) {
      g[axis] = left;
      out.push_back(g);
      return;
    }
    for (int v = left; v >= 0; --v) {
      g[axis] = v;
      rec(axis + 1, left - v);
    }
  };
  rec(0, k);
  return out;
}

std::vector<int> axis_separations(int N, int dense) {
  std::vector<int> m;
  const int top = N / 4;
  for (int k = 1; k <= std::min(dense, top); ++k) m.push_back(k);
  for (int p = 1; p <= top; p *= 2) {
    if (p > dense) m.push_back(p);
    if (p + p / 2 > dense && p + p / 2 <= top && p >= 2) m.push_back(p + p / 2);
  }
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

struct QuotientSup {
  double value = 0.0;
  long long pairs = 0;
};

// sup |v(x) - v(y)| / |x - y|^frac over axis pairs and random pairs.
QuotientSup quotient_sup(const SpatialGrid& g, const Eigen::VectorXcd& v, double frac, const HolderOptions& opts) {
  const std::vector<int> seps = axis_separations(g.N, opts.dense_separations);
  const int jobs = static_cast<int>(seps.size()) * g.dim;
  std::vector<double> best(jobs, 0.0);
  std::vector<long long> count(jobs, 0);
  const Eigen::Index total = g.size();
  parallel_for(jobs, opts.threads, [&](int job) {
    const int axis = job / static_cast<int>(seps.size());
    const int m = seps[job % seps.size()];
    Eigen::Index stride = 1;
    for (int a = g.dim - 1; a > axis; --a) stride *= g.N;
    const double inv = std::pow(m * g.spacing(), -frac);
    double b = 0.0;
    long long c = 0;
    for (Eigen::Index p = 0; p < total; ++p) {
      if ((p / stride) % g.N + m >= g.N) continue;
      b = std::max(b, std::norm(v(p + m * stride) - v(p)));
      ++c;
    }
    best[job] = std::sqrt(b) * inv;
    count[job] = c;
  });
  QuotientSup q;
  for (int j = 0; j < jobs; ++j) {
    q.value = std::max(q.value, best[j]);
    q.pairs += count[j];
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Eigen::Index> pick(0, total - 1);
  for (int k = 0; k < opts.random_pairs; ++k) {
    const Eigen::Index a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const double d = (g.point(a) - g.point(b)).norm();
    q.value = std::max(q.value, std::abs(v(a) - v(b)) / std::pow(d, frac));
    ++q.pairs;
  }
  return q;
}

Eigen::VectorXcd derivative_coeffs(const SpatialGrid& g, const Eigen::VectorXcd& c, const std::vector<int>& gamma) {
  Eigen::VectorXcd d = c;
  for (Eigen::Index p = 0; p < c.size(); ++p) {
    const std::vector<int> idx = g.unflatten(p);
    cplx factor = 1.0;
    for (int a = 0; a < g.dim; ++a) {
      if (gamma[a] == 0) continue;
      // The Nyquist bin has no signed frequency; odd derivatives drop it.
      if (idx[a] == g.N / 2 && gamma[a] % 2 == 1) factor = 0.0;
      factor *= std::pow(I * g.frequency(idx[a]), gamma[a]);
    }
    d(p) *= factor;
  }
  return d;
}

double frequency_radius(const SpatialGrid& g, Eigen::Index p) { return std::sqrt(g.frequency_norm2(p)); }

// Smooth bump on the shell 2^(k-1) < rho < 2^k.
double shell_bump(double rho, int k) {
  const double c = 0.75 * std::ldexp(1.0, k), w = 0.25 * std::ldexp(1.0, k);
  const double u = (rho - c) / w;
  return std::abs(u) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - u * u)) : 0.0;
}

// Largest |d arg m / d rho| for rho up to rho_max.
double max_phase_rate(const RadialMultiplier& m, double rho_max) {
  double best = 0.0;
  for (int i = 1; i <= 512; ++i) {
    const double rho = rho_max * i / 512.0;
    const double eps = 1e-7 * std::max(rho, 1.0);
    const cplx a = m(rho - eps), b = m(rho + eps);
    if (std::abs(a) == 0.0 || std::abs(b) == 0.0) continue;
    best = std::max(best, std::abs(std::arg(b / a)) / (2 * eps));
  }
  return best;
}

}  // namespace

Field spectral_derivative(const Field& f, const std::vector<int>& gamma) {
  f.validate();
  if (static_cast<int>(gamma.size()) != f.grid.dim) throw Error("size-mismatch", "one derivative order per axis");
  return Field{f.grid, fft_inverse(f.grid, derivative_coeffs(f.grid, fft_forward(f.grid, f.values), gamma))};
}

HolderEstimate holder_norm(const Field& f, double s, const HolderOptions& opts) {
  f.validate();
  if (!(s >= 0.0)) throw Error("invalid-order", "s must be >= 0");
  if (s >= 4.0) throw Error("unsupported", "derivative orders above 3 are not supported");
  if (top_third_energy_fraction(f) > 0.01) throw Error("unresolved-field", "top third of the spectrum holds over 1% of the energy");
  const SpatialGrid& g = f.grid;
  const int whole = static_cast<int>(std::floor(s));
  const double frac = s - whole;
  const Eigen::VectorXcd c = fft_forward(g, f.values);

  HolderEstimate est;
  est.s = s;
  for (int k = 0; k <= whole; ++k) {
    double sum = 0.0;
    for (const auto& gamma : multi_indices(g.dim, k)) {
      const Eigen::VectorXcd d = fft_inverse(g, derivative_coeffs(g, c, gamma));
      sum += d.cwiseAbs().maxCoeff();
      if (k == whole && frac > 0.0) {
        const QuotientSup q = quotient_sup(g, d, frac, opts);
        est.seminorm += q.value;
        est.pairs_sampled += q.pairs;
      }
    }
    est.sup_norms.push_back(sum);
  }
  for (double v : est.sup_norms) est.total += v;
  est.total += est.seminorm;
  return est;
}

Field apply_multiplier(const Field& f, const RadialMultiplier& m) {
  f.validate();
  const SpatialGrid& g = f.grid;
  Eigen::VectorXcd c = fft_forward(g, f.values);
  std::map<double, cplx> cache;
  for (Eigen::Index p = 0; p < c.size(); ++p) {
    if (c(p) == cplx(0.0, 0.0)) continue;
    const double k2 = g.frequency_norm2(p);
    auto it = cache.find(k2);
    if (it == cache.end()) it = cache.emplace(k2, m(std::sqrt(k2))).first;
    c(p) *= it->second;
  }
  return Field{g, fft_inverse(g, c)};
}

Field bessel_potential(const Field& f, double theta) {
  return apply_multiplier(f, [theta](double rho) { return cplx(bessel_factor(theta, rho), 0.0); });
}

Field weierstrass_sum(const SpatialGrid& g, double s_prime, int level, std::uint64_t seed) {
  g.validate();
  if (g.L != M_PI) throw Error("invalid-grid", "Weierstrass sums live on the 2 pi box");
  if (3 * (1 << level) > g.N) throw Error("invalid-grid", "grid does not resolve the top frequency");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2 * M_PI);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(g.size());
  const Eigen::Index total = g.size();
  Eigen::Index stride0 = total / g.N;
  for (int k = 1; k <= level; ++k) {
    const cplx a = std::pow(2.0, -k * s_prime) * std::polar(1.0, phase(rng));
    // Frequency 2^k along the first axis, scaled by the N^n of the forward transform.
    c((1 << k) * stride0) = a * static_cast<double>(total);
  }
  return Field{g, fft_inverse(g, c)};
}

double gain_index(SymbolKind kind, double alpha, int n) {
  switch (kind) {
    case SymbolKind::S: return n / alpha;
    case SymbolKind::Q: return (n - 2) / alpha;
    case SymbolKind::P: return (n + 2) / alpha - 2.0;
    case SymbolKind::S1: return n;
    default: throw Error("invalid-kind", "gain index is defined for S, Q, P and S1");
  }
}

ProbeReport multiplier_gain_probe(const RadialMultiplier& m, double gain, const ProbeConfig& cfg) {
  if (cfg.level_min < 1 || cfg.level_max < cfg.level_min || cfg.level_max > 14)
    throw Error("invalid-config", "levels must satisfy 1 <= level_min <= level_max <= 14");
  if (cfg.dim < 1 || cfg.dim > 3) throw Error("unsupported-dimension", "dim must be 1, 2 or 3");
  if (cfg.members < 1) throw Error("invalid-config", "members must be >= 1");
  const double target = cfg.s + gain;
  if (target < 0.0 || target + cfg.sharpness_offset >= 4.0 || cfg.s + cfg.sharpness_offset >= 4.0)
    throw Error("invalid-config", "Hoelder orders must lie in [0, 4)");

  // Box large enough that every packet stays off the boundary.
  const double top = std::ldexp(1.0, cfg.level_max);
  const double spread = max_phase_rate(m, top);
  SpatialGrid g{cfg.dim, 8, 1.25 * spread + 2 * M_PI};
  while (M_PI / g.L * g.N / 3.0 < 1.05 * top) g.N *= 2;
  const Eigen::Index total = g.size();

  // Packet spectra: unit-modulus pre-chirp conj(m) / |m| and its image |m| under T_m, both
  // normalized below by the sup of the pre-chirped packet.
  std::vector<Eigen::VectorXcd> pre_spectra, post_spectra;
  std::vector<double> scales;
  std::map<double, cplx> cache;
  std::vector<double> radius(total);
  for (Eigen::Index p = 0; p < total; ++p) radius[p] = frequency_radius(g, p);
  for (int k = 1; k <= cfg.level_max; ++k) {
    Eigen::VectorXcd pre = Eigen::VectorXcd::Zero(total), post = Eigen::VectorXcd::Zero(total);
    for (Eigen::Index p = 0; p < total; ++p) {
      const double rho = radius[p];
      const double b = shell_bump(rho, k);
      if (b == 0.0) continue;
      auto it = cache.find(rho);
      if (it == cache.end()) it = cache.emplace(rho, m(rho)).first;
      const double mag = std::abs(it->second);
      if (mag == 0.0) continue;
      pre(p) = b * std::conj(it->second) / mag;
      post(p) = b * mag;
    }
    scales.push_back(fft_inverse(g, pre).cwiseAbs().maxCoeff());
    pre_spectra.push_back(std::move(pre));
    post_spectra.push_back(std::move(post));
  }

  ProbeReport rep;
  rep.gain = gain;
  rep.grid = g;
  for (int k = cfg.level_min; k <= cfg.level_max; ++k) rep.levels.push_back(k);
  rep.ratio.assign(rep.levels.size(), 0.0);
  rep.sharp_ratio.assign(rep.levels.size(), 0.0);
  for (int member = 0; member < cfg.members; ++member) {
    std::mt19937_64 rng(cfg.seed + member);
    std::uniform_real_distribution<double> phase(0.0, 2 * M_PI);
    Eigen::VectorXcd phi_hat = Eigen::VectorXcd::Zero(total), out_hat = Eigen::VectorXcd::Zero(total);
    for (int k = 1; k <= cfg.level_max; ++k) {
      const cplx a = std::pow(2.0, -k * target) * std::polar(1.0, phase(rng)) / scales[k - 1];
      phi_hat += a * pre_spectra[k - 1];
      out_hat += a * post_spectra[k - 1];
      if (k < cfg.level_min) continue;
      const Field fphi{g, fft_inverse(g, phi_hat)}, fout{g, fft_inverse(g, out_hat)};
      const HolderEstimate src = holder_norm(fphi, target, cfg.holder);
      const HolderEstimate low = holder_norm(fout, cfg.s, cfg.holder);
      const HolderEstimate high = holder_norm(fout, cfg.s + cfg.sharpness_offset, cfg.holder);
      const size_t i = static_cast<size_t>(k - cfg.level_min);
      rep.ratio[i] = std::max(rep.ratio[i], low.total / src.total);
      rep.sharp_ratio[i] = std::max(rep.sharp_ratio[i], high.total / src.total);
      rep.pairs_sampled += src.pairs_sampled + low.pairs_sampled + high.pairs_sampled;
    }
  }
  rep.max_ratio = *std::max_element(rep.ratio.begin(), rep.ratio.end());
  rep.ratio_growth = rep.max_ratio / rep.ratio.front() - 1.0;
  rep.sharp_growth = rep.sharp_ratio.back() / rep.sharp_ratio.front();
  rep.sharp_monotone = std::is_sorted(rep.sharp_ratio.begin(), rep.sharp_ratio.end());
  return rep;
}

ProbeReport multiplier_gain_probe(SymbolKind kind, double alpha, const ProbeConfig& cfg) {
  const SymbolSpec spec{kind, kind == SymbolKind::S1 ? 1.0 : alpha, cfg.t, 0.0, cfg.dim};
  spec.validate();
  return multiplier_gain_probe([spec](double rho) { return symbol_radial(spec, rho); },
                               gain_index(kind, spec.alpha, cfg.dim), cfg);
}

}  // namespace mlfrac
