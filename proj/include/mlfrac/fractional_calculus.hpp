#ifndef MLFRAC_FRACTIONAL_CALCULUS_HPP
#define MLFRAC_FRACTIONAL_CALCULUS_HPP

#include <Eigen/Dense>

#include "mlfrac/special_functions.hpp"

namespace mlfrac {

// Nodes t_1 < ... < t_N, all after t0 = 0.
struct TimeGrid {
  double t0 = 0.0;
  Eigen::VectorXd nodes;
  bool uniform = false;

  static TimeGrid make_uniform(double T, int N);
  double step() const { return nodes.size() ? nodes(0) - t0 : 0.0; }
  void validate() const;
};

// Samples at the grid nodes plus the initial jet (f(0), f'(0)).
struct TimeSeries {
  TimeGrid grid;
  Eigen::VectorXcd values;
  cplx f0{0.0, 0.0};
  cplx df0{0.0, 0.0};
};

enum class CaputoMethod { outer_d2, l1 };

// Nodes at the start of a Caputo series computed with one-sided stencils.
inline constexpr int kCaputoLowOrderNodes = 2;

// t^(alpha-1)/Gamma(alpha) for t > 0, zero otherwise.
double g_function(double alpha, double t);

// (g_alpha * f)(t_j) by product integration of the piecewise-linear interpolant
// through (0, f0), (t_1, f_1), ...; the result's jet is left at zero.
TimeSeries rl_integral(const TimeSeries& f, double alpha);

// Caputo derivative of order 1 < alpha < 2 on a uniform grid.
// outer_d2: second central difference of the order 2 - alpha integral of f - jet.
// l1: integral of order 2 - alpha of the cellwise-constant second difference of f - jet,
// averaged from cell midpoints onto nodes.
TimeSeries caputo_derivative(const TimeSeries& f, double alpha,
                             CaputoMethod method = CaputoMethod::outer_d2);

// Sample f on the grid and take the jet from f(0) and f'(0).
template <class F>
TimeSeries sample(const TimeGrid& grid, F f, cplx f0, cplx df0) {
  TimeSeries s;
  s.grid = grid;
  s.values.resize(grid.nodes.size());
  for (Eigen::Index j = 0; j < grid.nodes.size(); ++j) s.values(j) = f(grid.nodes(j));
  s.f0 = f0;
  s.df0 = df0;
  return s;
}

}  // namespace mlfrac

#endif
