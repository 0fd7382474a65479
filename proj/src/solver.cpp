#include "mlfrac/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>

#include <unsupported/Eigen/FFT>

#include "mlfrac/quadrature.hpp"
#include "mlfrac/symbols.hpp"

namespace mlfrac {

static_assert(std::endian::native == std::endian::little, "field files are written in native little-endian order");

void SpatialGrid::validate() const {
  if (dim < 1 || dim > 3) throw Error("unsupported-dimension", "dim must be 1, 2 or 3");
  if (N < 8 || (N & (N - 1)) != 0) throw Error("invalid-grid", "N must be a power of two >= 8");
  if (!(L > 0.0) || !std::isfinite(L)) throw Error("invalid-grid", "L must be positive");
}

Eigen::Index SpatialGrid::size() const {
  Eigen::Index s = 1;
  for (int a = 0; a < dim; ++a) s *= N;
  return s;
}

double SpatialGrid::frequency(int m) const { return M_PI / L * (m < N / 2 ? m : m - N); }

std::vector<int> SpatialGrid::unflatten(Eigen::Index p) const {
  std::vector<int> idx(dim);
  for (int a = dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(p % N);
    p /= N;
  }
  return idx;
}

Eigen::VectorXd SpatialGrid::point(Eigen::Index p) const {
  const std::vector<int> idx = unflatten(p);
  Eigen::VectorXd x(dim);
  for (int a = 0; a < dim; ++a) x(a) = coordinate(idx[a]);
  return x;
}

double SpatialGrid::frequency_norm2(Eigen::Index p) const {
  double k2 = 0.0;
  for (int m : unflatten(p)) k2 += frequency(m) * frequency(m);
  return k2;
}

void Field::validate() const {
  grid.validate();
  if (values.size() != grid.size()) throw Error("size-mismatch", "field size does not match its grid");
}

Field Field::zeros(const SpatialGrid& g) {
  g.validate();
  return Field{g, Eigen::VectorXcd::Zero(g.size())};
}

Field Field::sample(const SpatialGrid& g, const std::function<cplx(const Eigen::VectorXd&)>& f) {
  Field u = zeros(g);
  for (Eigen::Index p = 0; p < u.values.size(); ++p) u.values(p) = f(g.point(p));
  return u;
}

namespace {

// 1D transforms along every axis of the row-major array.
Eigen::VectorXcd transform(const SpatialGrid& g, Eigen::VectorXcd v, bool forward) {
  Eigen::FFT<double> fft;
  const int N = g.N;
  const Eigen::Index total = g.size();
  std::vector<cplx> in(N), out(N);
  Eigen::Index stride = total;
  for (int a = 0; a < g.dim; ++a) {
    stride /= N;
    for (Eigen::Index base = 0; base < total; ++base) {
      if ((base / stride) % N != 0) continue;
      for (int i = 0; i < N; ++i) in[i] = v(base + i * stride);
      if (forward) fft.fwd(out, in);
      else fft.inv(out, in);
      for (int i = 0; i < N; ++i) v(base + i * stride) = out[i];
    }
  }
  return v;
}

bool top_third(const SpatialGrid& g, Eigen::Index p) {
  for (int m : g.unflatten(p)) {
    const int s = m < g.N / 2 ? m : g.N - m;
    if (3 * s > g.N) return true;
  }
  return false;
}

void check_same_grid(const Field& a, const Field& b) {
  a.validate();
  b.validate();
  if (!(a.grid == b.grid)) throw Error("grid-mismatch", "fields live on different grids");
}

// Modes grouped by |k|^2; every symbol depends on k through |k|^2 only.
std::map<double, std::vector<Eigen::Index>> group_modes(const SpatialGrid& g) {
  std::map<double, std::vector<Eigen::Index>> groups;
  for (Eigen::Index p = 0; p < g.size(); ++p) groups[g.frequency_norm2(p)].push_back(p);
  return groups;
}

// Product-integration weights of the kernel i^-alpha s^(beta-1) E_{alpha,beta}(w s^alpha) against
// a forcing linear on cells of width delta: cell l covers s in [l delta, (l+1) delta], and its
// contribution is a_l f(end near s = l delta) + b_l f(end near s = (l+1) delta).
struct DuhamelWeights {
  std::vector<cplx> a, b;
};

DuhamelWeights duhamel_weights(double alpha, double beta, double k2, double delta, int cells) {
  const cplx w = i_pow(-alpha) * k2;
  std::vector<cplx> c1(cells + 1), c2(cells + 1);
  for (int l = 0; l <= cells; ++l) {
    const double s = l * delta;
    const cplx z = w * std::pow(s, alpha);
    // Antiderivatives s^beta E_{alpha,beta+1} and s^(beta+1) E_{alpha,beta+2} of the kernel.
    c1[l] = std::pow(s, beta) * ml_eval(z, {alpha, beta + 1.0}).value;
    c2[l] = std::pow(s, beta + 1.0) * ml_eval(z, {alpha, beta + 2.0}).value;
  }
  const cplx pre = i_pow(-alpha);
  DuhamelWeights d;
  d.a.resize(cells);
  d.b.resize(cells);
  for (int l = 0; l < cells; ++l) {
    const double s0 = l * delta, s1 = (l + 1) * delta;
    const cplx m0 = c1[l + 1] - c1[l];
    const cplx m1 = (s1 * c1[l + 1] - c2[l + 1]) - (s0 * c1[l] - c2[l]);
    d.a[l] = pre * (s1 * m0 - m1) / delta;
    d.b[l] = pre * (m1 - s0 * m0) / delta;
  }
  return d;
}

// Forcing coefficients at tau_i = i delta, i = 0..cells, one row per sub-node.
std::vector<Eigen::VectorXcd> forcing_coefficients(const Forcing& f, const SpatialGrid& g, double delta, int cells,
                                                   bool dealias) {
  std::vector<Eigen::VectorXcd> out(cells + 1);
  for (int i = 0; i <= cells; ++i) {
    const Field fi = f(i * delta);
    fi.validate();
    if (!(fi.grid == g)) throw Error("grid-mismatch", "forcing lives on a different grid");
    out[i] = fft_forward(g, fi.values);
    if (dealias)
      for (Eigen::Index p = 0; p < out[i].size(); ++p)
        if (top_third(g, p)) out[i](p) = 0.0;
  }
  return out;
}

cplx convolve(const DuhamelWeights& d, const std::vector<Eigen::VectorXcd>& fh, Eigen::Index p, int end) {
  cplx acc(0.0, 0.0);
  for (int l = 0; l < end; ++l) acc += d.a[l] * fh[end - l](p) + d.b[l] * fh[end - l - 1](p);
  return acc;
}

SymbolSpec spec_for(SymbolKind kind, double alpha, double t, int dim) {
  return SymbolSpec{alpha == 1.0 && kind == SymbolKind::S ? SymbolKind::S1 : kind, alpha, t, 0.0, dim};
}

struct Spectra {
  Eigen::VectorXcd u0, u1;
};

Spectra data_spectra(const Field& u0, const Field& u1, bool dealias, std::vector<std::string>* warnings) {
  Spectra s{fft_forward(u0.grid, u0.values), fft_forward(u1.grid, u1.values)};
  if (!dealias && warnings) {
    if (top_third_energy_fraction(u0) > 0.01) warnings->push_back("aliasing: top third of the u0 spectrum holds over 1% of its energy");
    if (top_third_energy_fraction(u1) > 0.01) warnings->push_back("aliasing: top third of the u1 spectrum holds over 1% of its energy");
  }
  if (dealias) {
    for (Eigen::Index p = 0; p < s.u0.size(); ++p)
      if (top_third(u0.grid, p)) s.u0(p) = s.u1(p) = 0.0;
  }
  return s;
}

}  // namespace

Eigen::VectorXcd fft_forward(const SpatialGrid& g, const Eigen::VectorXcd& values) { return transform(g, values, true); }
Eigen::VectorXcd fft_inverse(const SpatialGrid& g, const Eigen::VectorXcd& coeffs) { return transform(g, coeffs, false); }

Field laplacian(const Field& u) {
  u.validate();
  Eigen::VectorXcd c = fft_forward(u.grid, u.values);
  for (Eigen::Index p = 0; p < c.size(); ++p) c(p) *= -u.grid.frequency_norm2(p);
  return Field{u.grid, fft_inverse(u.grid, c)};
}

double top_third_energy_fraction(const Field& u) {
  u.validate();
  const Eigen::VectorXcd c = fft_forward(u.grid, u.values);
  double top = 0.0, total = 0.0;
  for (Eigen::Index p = 0; p < c.size(); ++p) {
    const double e = std::norm(c(p));
    total += e;
    if (top_third(u.grid, p)) top += e;
  }
  return total > 0.0 ? top / total : 0.0;
}

Forcing forcing_from_samples(const TimeGrid& times, const Field& at_zero, const std::vector<Field>& at_nodes) {
  times.validate();
  if (static_cast<Eigen::Index>(at_nodes.size()) != times.nodes.size())
    throw Error("size-mismatch", "one forcing field per time node");
  return [times, at_zero, at_nodes](double t) {
    if (t <= times.t0) return at_zero;
    const Eigen::Index n = times.nodes.size();
    if (t >= times.nodes(n - 1)) return at_nodes.back();
    const double* begin = times.nodes.data();
    const Eigen::Index j = std::upper_bound(begin, begin + n, t) - begin;  // nodes(j-1) <= t < nodes(j)
    const double ta = j == 0 ? times.t0 : times.nodes(j - 1), tb = times.nodes(j);
    const Field& fa = j == 0 ? at_zero : at_nodes[j - 1];
    const Field& fb = at_nodes[j];
    const double w = (t - ta) / (tb - ta);
    return Field{fa.grid, (1.0 - w) * fa.values + w * fb.values};
  };
}

void SolveConfig::validate() const {
  if (!(alpha == 1.0 || (alpha > 1.0 && alpha < 2.0)))
    throw Error("invalid-alpha", "alpha must be 1 or lie in (1, 2); the wave endpoint 2 is excluded");
  times.validate();
  if (!times.uniform || times.t0 != 0.0) throw Error("nonuniform-grid", "solver needs a uniform grid from t = 0");
  if (duhamel_nodes < 4) throw Error("invalid-config", "duhamel_nodes must be >= 4");
}

Trajectory solve_mild(const Field& u0, const Field& u1, const Forcing& f, const SolveConfig& cfg) {
  cfg.validate();
  check_same_grid(u0, u1);
  const SpatialGrid& g = u0.grid;
  Trajectory traj;
  traj.grid = g;
  traj.times = cfg.times;
  traj.alpha = cfg.alpha;
  const Spectra data = data_spectra(u0, u1, cfg.dealias, &traj.warnings);
  if (cfg.alpha == 1.0 && u1.values.cwiseAbs().maxCoeff() > 0.0)
    traj.warnings.push_back("alpha = 1: first-order equation, u1 ignored");

  const int nt = static_cast<int>(cfg.times.nodes.size());
  const int m = cfg.duhamel_nodes;
  const double h = cfg.times.step();
  const int cells = nt * m;
  std::vector<Eigen::VectorXcd> fh;
  if (f) fh = forcing_coefficients(f, g, h / m, cells, cfg.dealias);

  std::vector<Eigen::VectorXcd> coeffs(nt, Eigen::VectorXcd::Zero(g.size()));
  const auto groups = group_modes(g);
  std::vector<const std::pair<const double, std::vector<Eigen::Index>>*> list;
  for (const auto& grp : groups) list.push_back(&grp);
  parallel_for(static_cast<int>(list.size()), cfg.threads, [&](int gi) {
    const double k2 = list[gi]->first;
    const double rho = std::sqrt(k2);
    DuhamelWeights dw;
    if (f) dw = duhamel_weights(cfg.alpha, cfg.alpha, k2, h / m, cells);
    for (int j = 0; j < nt; ++j) {
      const double t = cfg.times.nodes(j);
      const cplx s = symbol_radial(spec_for(SymbolKind::S, cfg.alpha, t, g.dim), rho);
      const cplx q = cfg.alpha == 1.0 ? cplx(0.0, 0.0) : symbol_radial(spec_for(SymbolKind::Q, cfg.alpha, t, g.dim), rho);
      for (Eigen::Index p : list[gi]->second) {
        cplx v = s * data.u0(p) + q * data.u1(p);
        if (f) v += convolve(dw, fh, p, (j + 1) * m);
        coeffs[j](p) = v;
      }
    }
  });
  traj.fields.reserve(nt);
  for (int j = 0; j < nt; ++j) traj.fields.push_back(Field{g, fft_inverse(g, coeffs[j])});
  return traj;
}

ResidualReport residual(const Trajectory& traj, const Field& u0, const Field& u1, const Forcing& f,
                        const SolveConfig& cfg) {
  cfg.validate();
  check_same_grid(u0, u1);
  const SpatialGrid& g = traj.grid;
  const int nt = static_cast<int>(traj.fields.size());
  if (nt < 64) throw Error("grid-too-short", "residual needs at least 64 time nodes");
  const Eigen::VectorXcd c0 = fft_forward(g, u0.values), c1 = fft_forward(g, u1.values);
  std::vector<Eigen::VectorXcd> uh(nt);
  for (int j = 0; j < nt; ++j) uh[j] = fft_forward(g, traj.fields[j].values);

  std::vector<Eigen::VectorXcd> rh(nt, Eigen::VectorXcd::Zero(g.size()));
  const cplx ia = i_pow(cfg.alpha);
  const double h = traj.times.step();
  for (Eigen::Index p = 0; p < g.size(); ++p) {
    const double k2 = g.frequency_norm2(p);
    Eigen::VectorXcd d(nt);
    if (cfg.alpha == 1.0) {
      // Second-order differences, one-sided at the last node.
      for (int j = 0; j < nt; ++j) {
        const cplx prev = j == 0 ? c0(p) : uh[j - 1](p);
        d(j) = j + 1 < nt ? (uh[j + 1](p) - prev) / (2 * h)
                          : (3.0 * uh[j](p) - 4.0 * uh[j - 1](p) + uh[j - 2](p)) / (2 * h);
      }
    } else {
      TimeSeries s;
      s.grid = traj.times;
      s.values.resize(nt);
      for (int j = 0; j < nt; ++j) s.values(j) = uh[j](p);
      s.f0 = c0(p);
      s.df0 = c1(p);
      d = caputo_derivative(s, cfg.alpha).values;
    }
    for (int j = 0; j < nt; ++j) rh[j](p) = ia * d(j) - k2 * uh[j](p);
  }
  ResidualReport rep;
  rep.sup_norm.resize(nt);
  for (int j = 0; j < nt; ++j) {
    Eigen::VectorXcd r = fft_inverse(g, rh[j]);
    if (f) r -= f(traj.times.nodes(j)).values;
    rep.sup_norm(j) = r.cwiseAbs().maxCoeff();
    if (j >= kCaputoLowOrderNodes) rep.interior_sup = std::max(rep.interior_sup, rep.sup_norm(j));
  }
  return rep;
}

State evaluate_at(const Field& u0, const Field& u1, const Forcing& f, const SolveConfig& cfg, double t) {
  if (!(cfg.alpha == 1.0 || (cfg.alpha > 1.0 && cfg.alpha < 2.0)))
    throw Error("invalid-alpha", "alpha must be 1 or lie in (1, 2)");
  if (cfg.duhamel_nodes < 4) throw Error("invalid-config", "duhamel_nodes must be >= 4");
  if (!(t > 0.0) || !std::isfinite(t)) throw Error("invalid-times", "evaluation time must be positive");
  check_same_grid(u0, u1);
  const SpatialGrid& g = u0.grid;
  const Spectra data = data_spectra(u0, u1, cfg.dealias, nullptr);
  const bool velocity = cfg.alpha != 1.0;
  const auto groups = group_modes(g);
  std::vector<const std::pair<const double, std::vector<Eigen::Index>>*> list;
  for (const auto& grp : groups) list.push_back(&grp);

  const int cells = 64 * cfg.duhamel_nodes;
  const double delta = t / cells;
  std::vector<Eigen::VectorXcd> fh;
  if (f) fh = forcing_coefficients(f, g, delta, cells, cfg.dealias);
  Eigen::VectorXcd uc = Eigen::VectorXcd::Zero(g.size()), vc = Eigen::VectorXcd::Zero(g.size());
  parallel_for(static_cast<int>(list.size()), cfg.threads, [&](int gi) {
    const double k2 = list[gi]->first;
    const double rho = std::sqrt(k2);
    const cplx s = symbol_radial(spec_for(SymbolKind::S, cfg.alpha, t, g.dim), rho);
    cplx q(0.0, 0.0), pk(0.0, 0.0);
    if (velocity) {
      q = symbol_radial(spec_for(SymbolKind::Q, cfg.alpha, t, g.dim), rho);
      pk = symbol_radial(spec_for(SymbolKind::P, cfg.alpha, t, g.dim), rho);
    }
    DuhamelWeights dp, dh;
    if (f) {
      dp = duhamel_weights(cfg.alpha, cfg.alpha, k2, delta, cells);
      if (velocity) dh = duhamel_weights(cfg.alpha, cfg.alpha - 1.0, k2, delta, cells);
    }
    for (Eigen::Index p : list[gi]->second) {
      uc(p) = s * data.u0(p) + q * data.u1(p);
      if (f) uc(p) += convolve(dp, fh, p, cells);
      if (velocity) {
        vc(p) = k2 * pk * data.u0(p) + s * data.u1(p);
        if (f) vc(p) += convolve(dh, fh, p, cells);
      }
    }
  });
  return State{Field{g, fft_inverse(g, uc)}, Field{g, fft_inverse(g, vc)}};
}

TraceReport initial_trace_check(const Field& u0, const Field& u1, const Forcing& f, const SolveConfig& cfg,
                                const std::vector<double>& times) {
  TraceReport rep;
  rep.times = times;
  for (double t : times) {
    const State st = evaluate_at(u0, u1, f, cfg, t);
    rep.displacement_error.push_back((st.displacement.values - u0.values).cwiseAbs().maxCoeff());
    if (cfg.alpha != 1.0) rep.velocity_error.push_back((st.velocity.values - u1.values).cwiseAbs().maxCoeff());
  }
  // Errors must not grow as t decreases along the listed order.
  auto monotone = [&](const std::vector<double>& e) {
    if (e.empty()) return false;
    for (size_t i = 1; i < e.size(); ++i) {
      const bool shrinking = times[i] < times[i - 1];
      if (shrinking ? e[i] > e[i - 1] : e[i] < e[i - 1]) return false;
    }
    return true;
  };
  rep.displacement_monotone = monotone(rep.displacement_error);
  rep.velocity_monotone = monotone(rep.velocity_error);
  return rep;
}

void write_field(const std::string& path, const Field& u) {
  u.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io-error", "cannot open " + path);
  const std::uint32_t n = static_cast<std::uint32_t>(u.grid.dim), N = static_cast<std::uint32_t>(u.grid.N);
  out.write("MLF1", 4);
  out.write(reinterpret_cast<const char*>(&n), 4);
  out.write(reinterpret_cast<const char*>(&N), 4);
  out.write(reinterpret_cast<const char*>(&u.grid.L), 8);
  out.write(reinterpret_cast<const char*>(u.values.data()), static_cast<std::streamsize>(u.values.size() * 16));
  if (!out) throw Error("io-error", "write failed for " + path);
}

Field read_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open " + path);
  char magic[4];
  std::uint32_t n = 0, N = 0;
  double L = 0.0;
  in.read(magic, 4);
  if (!in || std::string(magic, 4) != "MLF1") throw Error("bad-field-file", "missing MLF1 header in " + path);
  in.read(reinterpret_cast<char*>(&n), 4);
  in.read(reinterpret_cast<char*>(&N), 4);
  in.read(reinterpret_cast<char*>(&L), 8);
  if (!in) throw Error("bad-field-file", "truncated header in " + path);
  SpatialGrid g{static_cast<int>(n), static_cast<int>(N), L};
  Field u = Field::zeros(g);
  in.read(reinterpret_cast<char*>(u.values.data()), static_cast<std::streamsize>(u.values.size() * 16));
  if (!in) throw Error("bad-field-file", "truncated data in " + path);
  return u;
}

void write_field_csv(const std::string& path, const Field& u) {
  u.validate();
  if (u.grid.dim != 1) throw Error("unsupported-dimension", "CSV export is for n = 1");
  std::ofstream out(path);
  if (!out) throw Error("io-error", "cannot open " + path);
  out.precision(17);
  out << "x,re,im\n";
  for (Eigen::Index p = 0; p < u.values.size(); ++p)
    out << u.grid.coordinate(static_cast<int>(p)) << ',' << u.values(p).real() << ',' << u.values(p).imag() << '\n';
}

}  // namespace mlfrac
