#ifndef MLFRAC_KERNEL_LAB_HPP
#define MLFRAC_KERNEL_LAB_HPP

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mlfrac/symbols.hpp"

namespace mlfrac {

struct KernelOptions {
  double panel_width = 0.5;  // largest width in |xi| of the interpolation panels on the real axis
  double rel_tol = 1e-12;    // target for the adaptive contour quadratures
  int threads = 0;           // 0: hardware concurrency
};

// Radial kernel samples K(r); K is the inverse Fourier transform of the radial multiplier.
struct KernelSample {
  SymbolSpec spec;
  Eigen::VectorXd radii;
  Eigen::VectorXcd values;
  Eigen::VectorXd quad_error;
  std::vector<bool> converged;

  void validate() const;
};

// Inverse transform with (2 pi)^(-n/2) normalization of the multiplier (1+|xi|^2)^(-theta/2) K(t, |xi|).
KernelSample kernel_invert(const SymbolSpec& spec, const Eigen::VectorXd& radii, const KernelOptions& opts = {});

// Bessel potential kernel G^theta, normalized so that its integral is (2 pi)^(n/2).
KernelSample bessel_kernel_G(double theta, int n, const Eigen::VectorXd& radii);

// Saddle frequency rho*(r) and saddle phase of the dominant oscillation; the phase of K(r) advances like rho*.
double saddle_frequency(const SymbolSpec& spec, double r);
// Radius at which the saddle phase t (a-1) rho*^a reaches psi, a = 2/alpha.
double radius_for_saddle_phase(const SymbolSpec& spec, double psi);

// Fit window: saddle phase from 1e3 to 1e5, moved outward for theta > 0 until e^(-r), the part coming
// from the branch points of (1+|xi|^2)^(-theta/2), sits 1e-4 below (r t^(-alpha/2))^p. Large t keeps
// steep envelopes above the double-precision floor of the real-axis quadrature.
std::pair<double, double> fit_window(const SymbolSpec& spec);

// Closed-form large-|x| envelope exponent of the kernel.
double decay_exponent(SymbolKind kind, double alpha, double theta, int n);
// 2 / (2 - alpha).
double phase_exponent(double alpha);

struct AsymptoticLaw {
  double p = 0.0;  // envelope |x|^p
  double q = 0.0;  // oscillation exp(-i B |x|^q)
  double A = 0.0;
  double B = 0.0;
  double c = 0.0;  // phase offset
  double r_min = 0.0, r_max = 0.0;
  double residual = 0.0;      // RMS of the log-envelope fit
  double oscillations = 0.0;  // phase cycles across the window
};

// Radii in [r_min, r_max] in pairs one eighth of a local period apart, for phase-derivative fits.
Eigen::VectorXd fit_radii(const SymbolSpec& spec, double r_min, double r_max, int pairs);

AsymptoticLaw fit_asymptotic_law(const KernelSample& sample);

enum class SmallXRegime { bounded, log, power };
std::string to_string(SmallXRegime r);

struct SmallXReport {
  SmallXRegime predicted = SmallXRegime::bounded;
  SmallXRegime observed = SmallXRegime::bounded;
  double predicted_power = 0.0;
  double observed_power = 0.0;
  double growth_ratio = 0.0;  // ratio of successive per-decade increments of K
  std::vector<double> radii;
  std::vector<double> abs_values;
  bool matches = false;
};

SmallXRegime predicted_small_x_regime(SymbolKind kind, double theta, int n, double* power = nullptr);
SmallXReport small_x_behavior(const SymbolSpec& spec, const std::vector<double>& radii, const KernelOptions& opts = {});

struct ThresholdEntry {
  double theta = 0.0;
  double tail_slope = 0.0;  // d log(|K| r^n) / d log r over the last octaves; NaN if under 3/4 of the radii converge
  std::string verdict;      // convergent, divergent or inconclusive
};

struct ThresholdScanReport {
  std::vector<ThresholdEntry> entries;
  double predicted = 0.0;
  double empirical = 0.0;
  bool conclusive = false;
};

ThresholdScanReport l1_threshold_scan(SymbolKind kind, double alpha, int n, const std::vector<double>& theta_list,
                                      double r_max = 1024.0, const KernelOptions& opts = {});

struct BoundRow {
  double t = 0.0, r = 0.0, value = 0.0, bound = 0.0, ratio = 0.0;
};

struct BoundReport {
  double sigma = 0.0;
  double max_ratio = 0.0;
  std::vector<BoundRow> rows;
  bool finite = false;
};

// Piecewise upper bound for |J^theta K(t, x)|, K in {S, Q, P}, up to its constant.
double piecewise_bound(SymbolKind kind, double alpha, double theta, int n, double t, double r);
double bound_sigma(SymbolKind kind, double alpha, double theta, int n);

BoundReport piecewise_bound_check(SymbolKind kind, double alpha, double theta, int n, const std::vector<double>& t_list,
                                  const std::vector<double>& radii, const KernelOptions& opts = {});

// Tail mass over |x| >= R - 1 from the dominating bound C |x|^(-n-sigma).
double bound_tail_mass(int n, double sigma, double C, double R);

struct MismatchReport {
  double radius = 0.0;
  double constant = 0.0;  // uniform C in |K| <= C |x|^(-n-sigma) over 0 < t < 1, |x| >= 1
  double tail = 0.0;      // bound tail mass at radius
  double sigma = 0.0;
};

MismatchReport mismatch_radius(SymbolKind kind, double alpha, double theta, int n, double delta,
                               const KernelOptions& opts = {});

// Direct tail quadrature of |K(t, .)| over |x| >= R - 1 up to r_far, plus a power-law extrapolation beyond.
double direct_tail_mass(const SymbolSpec& spec, double R, double r_far, const KernelOptions& opts = {});

}  // namespace mlfrac

#endif
