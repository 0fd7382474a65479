#ifndef MLFRAC_SPECIAL_FUNCTIONS_HPP
#define MLFRAC_SPECIAL_FUNCTIONS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace mlfrac {

using cplx = std::complex<double>;

// Error carrying a short machine-readable code.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail = "")
      : std::runtime_error(detail.empty() ? code : code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
};

enum class MLBranch { series, asymptotic };

struct MLEvalReport {
  cplx value{0.0, 0.0};
  MLBranch branch = MLBranch::series;
  int terms_used = 0;
  double est_abs_error = 0.0;
};

// 1/Gamma(x), exactly zero at non-positive integers.
double rgamma(double x);

void validate(const MLParams& p);

// Radius beyond which ml_eval uses the asymptotic expansion: |z|^(1/alpha) = 32.
double switching_radius(double alpha);

// Smallest |z| accepted by ml_asymptotic.
inline constexpr double kAsymptoticMinRadius = 8.0;

// Power series sum_k z^k / Gamma(alpha k + beta). Accumulates in long double and
// escalates to quad or 50-digit arithmetic when cancellation eats the result.
MLEvalReport ml_series(cplx z, const MLParams& p, double tol = 1e-12);

// Large-|z| expansion with m algebraic terms. Every exponential branch
// zeta_k = z^(1/alpha) e^(2 pi i k / alpha) is kept with an erfc Stokes weight.
MLEvalReport ml_asymptotic(cplx z, const MLParams& p, int m = 6,
                           double min_radius = kAsymptoticMinRadius);

// Dispatcher: series for |z| <= rho, optimally truncated expansion beyond.
MLEvalReport ml_eval(cplx z, const MLParams& p, double rho = -1.0);

inline cplx ml(cplx z, const MLParams& p) { return ml_eval(z, p).value; }

// w^(beta-m-1) E_{alpha,beta-m}(w^alpha), the m-th derivative of w^(beta-1) E_{alpha,beta}(w^alpha).
cplx ml_scaled_derivative(cplx w, const MLParams& p, int m);

}  // namespace mlfrac

#endif
