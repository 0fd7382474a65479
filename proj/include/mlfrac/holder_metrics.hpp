#ifndef MLFRAC_HOLDER_METRICS_HPP
#define MLFRAC_HOLDER_METRICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mlfrac/solver.hpp"
#include "mlfrac/symbols.hpp"

namespace mlfrac {

struct HolderEstimate {
  double s = 0.0;
  std::vector<double> sup_norms;  // entry j: sum over |gamma| = j of sup |D^gamma f|, j = 0..[s]
  double seminorm = 0.0;          // sum over |gamma| = [s] of the {s}-Hoelder quotient sup; 0 for integer s
  double total = 0.0;             // sum of sup_norms plus seminorm
  long long pairs_sampled = 0;
};

struct HolderOptions {
  int dense_separations = 64;  // every axis separation m h with m <= this; beyond it dyadic and 3/2-dyadic steps up to N/4
  int random_pairs = 10000;
  std::uint64_t seed = 1;
  int threads = 0;
};

// Lower-bound estimate of the C^s norm from grid samples; derivatives are spectral. Throws
// "unsupported" for s >= 4 and "unresolved-field" when the top third of the spectrum holds over 1%
// of the energy.
HolderEstimate holder_norm(const Field& f, double s, const HolderOptions& opts = {});

// D^gamma f by spectral differentiation; gamma holds one order per axis.
Field spectral_derivative(const Field& f, const std::vector<int>& gamma);

using RadialMultiplier = std::function<cplx(double rho)>;

// T_m f for a radial multiplier m(|k|).
Field apply_multiplier(const Field& f, const RadialMultiplier& m);
// Bessel potential J^theta f, multiplier (1 + |k|^2)^(-theta/2).
Field bessel_potential(const Field& f, double theta);

// Weierstrass sum sum_{k=1..level} 2^(-k s') e^{i phase_k} e^{i 2^k x_0} on the 2 pi box, random phases.
Field weierstrass_sum(const SpatialGrid& g, double s_prime, int level, std::uint64_t seed);

// Derivative gain theta* of a mild-solution symbol as a multiplier C^(theta* + s) -> C^s:
// S n/alpha, Q (n - 2)/alpha, P (n + 2)/alpha - 2, S1 n.
double gain_index(SymbolKind kind, double alpha, int n);

struct ProbeConfig {
  double s = 0.5;
  int level_min = 4;
  int level_max = 9;
  int members = 4;                 // random-phase family members per level; ratios take the max
  double sharpness_offset = 0.25;  // target s + offset in the sharpness probe
  int dim = 1;
  double t = 1.0;
  std::uint64_t seed = 7;
  HolderOptions holder;
};

struct ProbeReport {
  double gain = 0.0;
  SpatialGrid grid;
  std::vector<int> levels;
  std::vector<double> ratio;        // |T phi_j|_{C^s} / |phi_j|_{C^(s + gain)}
  std::vector<double> sharp_ratio;  // |T phi_j|_{C^(s + offset)} / |phi_j|_{C^(s + gain)}
  double max_ratio = 0.0;
  double ratio_growth = 0.0;   // max ratio over all levels / ratio at level_min - 1
  double sharp_growth = 0.0;   // sharp ratio at level_max / at level_min
  bool sharp_monotone = false;
  long long pairs_sampled = 0;
};

// Family phi_j = sum_{k<=j} 2^(-k (s + gain)) e^{i phase_k} B_k, where B_k is the unit-sup wave packet
// on the shell 2^(k-1) < |k| < 2^k whose phase is the conjugate of m, so T_m refocuses it at the
// origin. Each level takes the max ratio over cfg.members random-phase members. The box is sized so
// the packets do not wrap.
ProbeReport multiplier_gain_probe(const RadialMultiplier& m, double gain, const ProbeConfig& cfg);
// Mild-solution symbol at time cfg.t with its own gain index.
ProbeReport multiplier_gain_probe(SymbolKind kind, double alpha, const ProbeConfig& cfg);

}  // namespace mlfrac

#endif
