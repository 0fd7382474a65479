#include "mlfrac/fractional_calculus.hpp"

#include <cmath>

namespace mlfrac {

TimeGrid TimeGrid::make_uniform(double T, int N) {
  if (!(T > 0.0) || N < 1) throw Error("invalid-grid", "need T > 0 and N >= 1");
  TimeGrid g;
  g.nodes.resize(N);
  for (int j = 0; j < N; ++j) g.nodes(j) = T * (j + 1) / N;
  g.uniform = true;
  return g;
}

void TimeGrid::validate() const {
  if (nodes.size() == 0) throw Error("invalid-grid", "empty grid");
  double prev = t0;
  for (Eigen::Index j = 0; j < nodes.size(); ++j) {
    if (!(nodes(j) > prev)) throw Error("invalid-grid", "nodes must increase strictly from t0");
    prev = nodes(j);
  }
}

double g_function(double alpha, double t) {
  if (alpha == 0.0) throw Error("dirac-not-pointwise");
  if (!(alpha > 0.0)) throw Error("invalid-params", "alpha must be positive");
  if (t <= 0.0) return 0.0;
  return std::pow(t, alpha - 1.0) * rgamma(alpha);
}

TimeSeries rl_integral(const TimeSeries& f, double alpha) {
  if (!(alpha > 0.0)) throw Error("invalid-params", "alpha must be positive");
  f.grid.validate();
  const Eigen::Index N = f.grid.nodes.size();
  if (f.values.size() != N) throw Error("invalid-series", "values and nodes differ in length");
  Eigen::VectorXd tau(N + 1);
  Eigen::VectorXcd v(N + 1);
  tau(0) = f.grid.t0;
  v(0) = f.f0;
  tau.tail(N) = f.grid.nodes;
  v.tail(N) = f.values;

  const double c = rgamma(alpha);
  TimeSeries out;
  out.grid = f.grid;
  out.values.setZero(N);
  for (Eigen::Index j = 1; j <= N; ++j) {
    const double t = tau(j);
    cplx acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < j; ++i) {
      const double A = t - tau(i), B = t - tau(i + 1), len = tau(i + 1) - tau(i);
      const double Aa = std::pow(A, alpha), Ba = std::pow(B, alpha);
      const double I0 = (Aa - Ba) / alpha;
      const double I1 = (Aa * A - Ba * B) / (alpha + 1.0);
      acc += v(i) * ((I1 - B * I0) / len) + v(i + 1) * ((A * I0 - I1) / len);
    }
    out.values(j - 1) = c * acc;
  }
  return out;
}

namespace {

Eigen::VectorXcd jet_subtracted(const TimeSeries& f) {
  Eigen::VectorXcd w(f.values.size() + 1);
  w(0) = 0.0;
  for (Eigen::Index j = 0; j < f.values.size(); ++j)
    w(j + 1) = f.values(j) - f.f0 - f.df0 * f.grid.nodes(j);
  return w;
}

}  // namespace

TimeSeries caputo_derivative(const TimeSeries& f, double alpha, CaputoMethod method) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw Error("invalid-params", "alpha must lie in (1, 2)");
  f.grid.validate();
  const Eigen::Index N = f.grid.nodes.size();
  if (N < 5) throw Error("grid-too-short");
  if (!f.grid.uniform) throw Error("nonuniform-grid", "caputo_derivative needs a uniform grid");
  const double h = f.grid.step();
  const Eigen::VectorXcd w = jet_subtracted(f);

  TimeSeries out;
  out.grid = f.grid;
  out.values.setZero(N);
  if (method == CaputoMethod::l1) {
    // Piecewise-constant second derivative on each cell, the slope at 0 being zero after the jet.
    Eigen::VectorXcd dd(N);
    cplx prev_slope(0.0, 0.0);
    for (Eigen::Index k = 0; k < N; ++k) {
      const cplx slope = (w(k + 1) - w(k)) / h;
      dd(k) = (slope - prev_slope) / h;
      prev_slope = slope;
    }
    const double beta = 2.0 - alpha;
    Eigen::VectorXd b(N);
    for (Eigen::Index k = 0; k < N; ++k) b(k) = std::pow(k + 1.0, beta) - std::pow(double(k), beta);
    const double scale = std::pow(h, beta) * rgamma(beta + 1.0);
    // The sum for cell n approximates the derivative at the cell midpoint; average onto nodes.
    Eigen::VectorXcd mid(N);
    for (Eigen::Index n = 0; n < N; ++n) {
      cplx acc(0.0, 0.0);
      for (Eigen::Index k = 0; k <= n; ++k) acc += b(n - k) * dd(k);
      mid(n) = scale * acc;
    }
    for (Eigen::Index n = 0; n + 1 < N; ++n) out.values(n) = 0.5 * (mid(n) + mid(n + 1));
    out.values(N - 1) = 1.5 * mid(N - 1) - 0.5 * mid(N - 2);
    return out;
  }

  TimeSeries ws;
  ws.grid = f.grid;
  ws.values = w.tail(N);
  const TimeSeries I = rl_integral(ws, 2.0 - alpha);
  Eigen::VectorXcd H(N + 1);
  H(0) = 0.0;
  H.tail(N) = I.values;
  for (Eigen::Index n = 1; n < N; ++n) out.values(n - 1) = (H(n + 1) - 2.0 * H(n) + H(n - 1)) / (h * h);
  out.values(N - 1) = (2.0 * H(N) - 5.0 * H(N - 1) + 4.0 * H(N - 2) - H(N - 3)) / (h * h);
  return out;
}

}  // namespace mlfrac
