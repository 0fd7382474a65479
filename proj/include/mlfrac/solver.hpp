#ifndef MLFRAC_SOLVER_HPP
#define MLFRAC_SOLVER_HPP

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mlfrac/fractional_calculus.hpp"

namespace mlfrac {

// Periodic box [-L, L)^n with N points per axis; axis 0 varies slowest in the flat layout.
struct SpatialGrid {
  int dim = 1;
  int N = 64;
  double L = M_PI;

  void validate() const;
  Eigen::Index size() const;
  double spacing() const { return 2.0 * L / N; }
  // Coordinate of point i along an axis, -L + i h.
  double coordinate(int i) const { return -L + i * spacing(); }
  // Angular frequency of FFT bin m along an axis, (pi / L) * (m < N/2 ? m : m - N).
  double frequency(int m) const;
  // Per-axis indices of flat index p.
  std::vector<int> unflatten(Eigen::Index p) const;
  Eigen::VectorXd point(Eigen::Index p) const;
  // |k|^2 of flat FFT index p.
  double frequency_norm2(Eigen::Index p) const;
  bool operator==(const SpatialGrid& o) const { return dim == o.dim && N == o.N && L == o.L; }
};

struct Field {
  SpatialGrid grid;
  Eigen::VectorXcd values;

  void validate() const;
  static Field zeros(const SpatialGrid& g);
  // Samples f at every grid point.
  static Field sample(const SpatialGrid& g, const std::function<cplx(const Eigen::VectorXd&)>& f);
  double sup_norm() const { return values.size() ? values.cwiseAbs().maxCoeff() : 0.0; }
};

// Unnormalized forward transform and its inverse (scaled by N^-n).
Eigen::VectorXcd fft_forward(const SpatialGrid& g, const Eigen::VectorXcd& values);
Eigen::VectorXcd fft_inverse(const SpatialGrid& g, const Eigen::VectorXcd& coeffs);
// Spectral Laplacian.
Field laplacian(const Field& u);
// Share of spectral energy in the top third of frequencies along any axis.
double top_third_energy_fraction(const Field& u);

// Forcing f(t, .) as a field.
using Forcing = std::function<Field(double t)>;
// Linear interpolation in time through fields at 0 and at the grid nodes.
Forcing forcing_from_samples(const TimeGrid& times, const Field& at_zero, const std::vector<Field>& at_nodes);

struct SolveConfig {
  double alpha = 1.5;      // 1 selects the Schroedinger path; otherwise 1 < alpha < 2
  TimeGrid times;          // uniform
  int duhamel_nodes = 4;   // forcing samples per time step for the Duhamel product integration
  bool dealias = false;    // zero the top third of the spectrum of the data
  int threads = 0;

  void validate() const;
};

struct Trajectory {
  SpatialGrid grid;
  TimeGrid times;
  double alpha = 1.5;
  std::vector<Field> fields;  // u(t_j), j = 1..N
  std::vector<std::string> warnings;
};

// Mild solution S u0 + Q u1 + int_0^t P(t - tau) f(tau) dtau, mode by mode. Forcing may be empty.
Trajectory solve_mild(const Field& u0, const Field& u1, const Forcing& f, const SolveConfig& cfg);

struct ResidualReport {
  Eigen::VectorXd sup_norm;  // per time node
  double interior_sup = 0.0; // sup over nodes past the low-order start of the Caputo stencil
};

// sup_x |i^alpha D_t^alpha u + Laplacian u - f| per node, Caputo with jet (u0, u1).
ResidualReport residual(const Trajectory& traj, const Field& u0, const Field& u1, const Forcing& f,
                        const SolveConfig& cfg);

struct State {
  Field displacement;
  Field velocity;  // zero for alpha = 1
};

// u(t) and d/dt u(t) at one time t > 0; the velocity uses d/dt S = |k|^2 P, d/dt Q = S and the H kernel
// in the Duhamel term, which runs on a uniform sub-grid of [0, t] with 64 * duhamel_nodes cells.
State evaluate_at(const Field& u0, const Field& u1, const Forcing& f, const SolveConfig& cfg, double t);

struct TraceReport {
  std::vector<double> times;
  std::vector<double> displacement_error;  // sup |u(t) - u0|
  std::vector<double> velocity_error;      // sup |d/dt u(t) - u1|; empty for alpha = 1
  bool displacement_monotone = false;
  bool velocity_monotone = false;
};

TraceReport initial_trace_check(const Field& u0, const Field& u1, const Forcing& f, const SolveConfig& cfg,
                                const std::vector<double>& times);

// Binary field file: "MLF1", u32 n, u32 N, f64 L, then N^n (re, im) f64 pairs, little-endian.
void write_field(const std::string& path, const Field& u);
Field read_field(const std::string& path);
// CSV x,re,im for n = 1.
void write_field_csv(const std::string& path, const Field& u);

}  // namespace mlfrac

#endif
