#ifndef MLFRAC_QUADRATURE_HPP
#define MLFRAC_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "mlfrac/special_functions.hpp"

namespace mlfrac {

// Gauss-Legendre rule on [-1, 1], nodes ascending; bary holds barycentric interpolation weights.
struct GaussRule {
  std::vector<double> x, w, bary;
};

// Cached and safe to call from several threads; the reference stays valid.
const GaussRule& gauss_legendre(int n);

struct QuadResult {
  cplx value{0.0, 0.0};
  double error = 0.0;
  bool converged = true;
  int panels = 0;
};

// Globally adaptive 7/15-point Gauss-Kronrod over [breaks.front(), breaks.back()], starting from the
// given panels. Stops when the summed error estimate is below max(abs_tol, rel_tol * sum |panel|).
QuadResult integrate_adaptive(const std::function<cplx(double)>& f, const std::vector<double>& breaks,
                              double rel_tol, double abs_tol = 0.0, int max_panels = 4000);

// Runs body(i) for i in [0, n) on up to `threads` threads (0: hardware concurrency).
void parallel_for(int n, int threads, const std::function<void(int)>& body);

}  // namespace mlfrac

#endif
