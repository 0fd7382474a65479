#ifndef MLFRAC_SYMBOLS_HPP
#define MLFRAC_SYMBOLS_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mlfrac/fractional_calculus.hpp"
#include "mlfrac/special_functions.hpp"

namespace mlfrac {

enum class SymbolKind { S, Q, P, M, N, L, H, S1 };

SymbolKind parse_symbol_kind(const std::string& s);
std::string to_string(SymbolKind k);

struct SymbolSpec {
  SymbolKind kind = SymbolKind::S;
  double alpha = 1.5;
  double t = 1.0;
  double theta = 0.0;
  int dim = 1;

  void validate() const;
};

// e^(-i alpha pi / 2) and e^(i alpha pi / 2).
inline cplx i_pow(double a) { return std::polar(1.0, a * M_PI / 2); }

// Integrability threshold theta_K: the kernel of (1+|xi|^2)^(-theta/2) K is in L^1 for theta above it.
double theta_threshold(SymbolKind kind, double alpha, int n);

// A symbol other than S1 factors as prefactor(t, |xi|) * E_{alpha,beta}(i^-alpha t^alpha |xi|^2).
struct MLFactor {
  cplx prefactor;
  double beta;
  cplx z;
};
MLFactor ml_factor(const SymbolSpec& spec, double rho);

double bessel_factor(double theta, double rho);

// Symbol value at |xi| = rho.
cplx symbol_radial(const SymbolSpec& spec, double rho);

// Symbols are radial: xi is reduced to its Euclidean norm.
cplx symbol_eval(const SymbolSpec& spec, const Eigen::VectorXd& xi);

// Leading oscillatory term plus m algebraic corrections; needs t |xi|^(2/alpha) >= 10.
cplx symbol_large_xi(const SymbolSpec& spec, double rho, int m);

// Leading oscillatory term alone, defined for complex rho with Re rho > 0 by analytic continuation.
cplx symbol_leading(const SymbolSpec& spec, cplx rho);

// symbol_leading without its phase factor exp(-i t rho^(2/alpha)).
cplx symbol_leading_amplitude(const SymbolSpec& spec, cplx rho);

// Sum of the first m algebraic corrections, analytic in rho off the imaginary axis.
cplx symbol_algebraic(const SymbolSpec& spec, cplx rho, int m);

struct TimeIdentityReport {
  double sup_first_derivative_gap = 0.0;    // sup |d/dt Q - S|
  double sup_fractional_gap = 0.0;          // sup |i^-alpha D^(2-alpha) Q - P|
  double sup_fractional_gap_unscaled = 0.0; // sup |D^(2-alpha) Q - P|
};

// Differentiates Q(., xi) in time on a uniform grid and compares with S and P.
TimeIdentityReport symbol_time_identity_check(double alpha, double rho, const TimeGrid& grid,
                                              int skip_nodes = kCaputoLowOrderNodes);

struct DerivativeProbeReport {
  std::vector<double> xi;
  std::vector<double> ratio;
  double sup_ratio = 0.0;
  double log_slope = 0.0;  // least-squares slope of log ratio against log |xi|
};

// |d^order/dxi^order K(1, xi)| divided by its predicted power of |xi|, for n = 1.
DerivativeProbeReport symbol_derivative_bound_probe(SymbolKind kind, double alpha, int order,
                                                    const std::vector<double>& xi_samples);

}  // namespace mlfrac

#endif
