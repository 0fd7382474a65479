#include <doctest.h>

#include <cmath>

#include "mlfrac/kernel_lab.hpp"

using namespace mlfrac;

namespace {

struct KernelCase {
  SymbolKind kind;
  double alpha, t, x;
  cplx value;
};

// n = 1, theta = 0; Wright-function series at 40+ digits.
const KernelCase kWrightTable[] = {
    {SymbolKind::S1, 1.0, 1, 5, {0.48313510083847129619, -0.51631431738602811307}},
    {SymbolKind::S, 1.5, 1, 0.5, {0.46194147928976991082, -0.29025104157571941071}},
    {SymbolKind::S, 1.5, 1, 2, {0.911923045630790249, 1.1987126549901723847}},
    {SymbolKind::S, 1.5, 1, 5, {-2.5020223625578009341, 2.7932948991409765236}},
    {SymbolKind::S, 1.5, 1, 8, {-4.1087061256909119677, -4.3724753481938116692}},
    {SymbolKind::Q, 1.5, 1, 3, {-0.085100404896926827569, 0.015999139398505119499}},
    {SymbolKind::P, 1.5, 1, 3, {0.43992013145782652263, -0.053458209778550850152}},
    {SymbolKind::S, 1.25, 1, 4, {1.0946469662291909555, -0.1741242444742047509}},
    {SymbolKind::Q, 1.9, 1, 1.5, {0.035182432507627919222, 0.028759479842513098101}},
    {SymbolKind::P, 1.25, 2, 6, {-0.28978913644418350953, -0.36647560540033543318}},
    {SymbolKind::S, 1.5, 0.25, 3, {14.081291452631662158, -11.21237123266956058}},
    {SymbolKind::Q, 1.5, 4, 10, {-0.004657082048750175415, -0.075404882251632888799}},
};

Eigen::VectorXd radii(std::initializer_list<double> r) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(r.size()));
  Eigen::Index i = 0;
  for (double x : r) v(i++) = x;
  return v;
}

AsymptoticLaw fit_on_window(const SymbolSpec& s, int pairs = 12) {
  const auto [r0, r1] = fit_window(s);
  return fit_asymptotic_law(kernel_invert(s, fit_radii(s, r0, r1, pairs)));
}

}  // namespace

TEST_CASE("one-dimensional kernels match the Wright series") {
  for (const auto& c : kWrightTable) {
    const SymbolSpec s{c.kind, c.alpha, c.t, 0.0, 1};
    const KernelSample k = kernel_invert(s, radii({c.x}));
    INFO("kind=" << to_string(c.kind) << " alpha=" << c.alpha << " t=" << c.t << " x=" << c.x);
    CHECK(k.converged[0]);
    CHECK(std::abs(k.values(0) - c.value) < 1e-9 * std::abs(c.value));
    CHECK(k.quad_error(0) > 0.0);
  }
}

TEST_CASE("free Schroedinger kernel has constant modulus") {
  for (int n = 1; n <= 3; ++n) {
    for (double t : {0.5, 2.0}) {
      const KernelSample k = kernel_invert({SymbolKind::S1, 1.0, t, 0.0, n}, radii({0.5, 2.0, 7.0}));
      const double expected = std::pow(2.0 * t, -n / 2.0);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(std::abs(k.values(i)) - expected) < 1e-9 * expected);
    }
  }
}

TEST_CASE("three-dimensional kernel from the one-dimensional one") {
  // The n = 3 kernel is -(1/r) d/dr of the n = 1 kernel.
  const double r = 2.5, h = 1e-3;
  const KernelSample k1 = kernel_invert({SymbolKind::Q, 1.5, 1.0, 0.0, 1}, radii({r - 2 * h, r - h, r + h, r + 2 * h}));
  const KernelSample k3 = kernel_invert({SymbolKind::Q, 1.5, 1.0, 0.0, 3}, radii({r}));
  const cplx d = (k1.values(0) - 8.0 * k1.values(1) + 8.0 * k1.values(2) - k1.values(3)) / (12.0 * h);
  CHECK(std::abs(k3.values(0) + d / r) < 1e-8 * std::abs(k3.values(0)));
}

TEST_CASE("inversion is deterministic across thread counts") {
  const SymbolSpec s{SymbolKind::P, 1.5, 1.0, 1.0, 2};
  const Eigen::VectorXd r = radii({0.3, 1.0, 3.0, 9.0});
  KernelOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const KernelSample a = kernel_invert(s, r, one), b = kernel_invert(s, r, many);
  for (Eigen::Index i = 0; i < r.size(); ++i) CHECK(a.values(i) == b.values(i));
}

TEST_CASE("scaling collapse in t") {
  for (int n : {1, 3}) {
    const double alpha = 1.5;
    const Eigen::VectorXd base = radii({0.7, 2.5, 6.0});
    cplx ref[3];
    for (double t : {1.0, 0.25, 4.0}) {
      const Eigen::VectorXd r = base * std::pow(t, alpha / 2);
      const KernelSample k = kernel_invert({SymbolKind::S, alpha, t, 0.0, n}, r);
      for (int i = 0; i < 3; ++i) {
        const cplx v = std::pow(t, alpha * n / 2) * k.values(i);
        if (t == 1.0) ref[i] = v;
        else CHECK(std::abs(v - ref[i]) < 1e-9 * std::abs(ref[i]));
      }
    }
  }
}

TEST_CASE("panel refinement stays within the reported error") {
  const SymbolSpec s{SymbolKind::S, 1.75, 1.0, 1.0, 2};
  const Eigen::VectorXd r = radii({0.5, 2.0, 5.0});
  KernelOptions fine;
  fine.panel_width = 0.25;
  const KernelSample a = kernel_invert(s, r), b = kernel_invert(s, r, fine);
  for (Eigen::Index i = 0; i < r.size(); ++i)
    CHECK(std::abs(a.values(i) - b.values(i)) < 10.0 * (a.quad_error(i) + b.quad_error(i)));
}

TEST_CASE("kernel errors") {
  CHECK_THROWS_WITH_AS(kernel_invert({SymbolKind::S, 1.5, 1.0, 0.0, 4}, radii({1.0})),
                       doctest::Contains("unsupported-dimension"), Error);
  CHECK_THROWS_AS(kernel_invert({SymbolKind::S, 1.5, 1.0, 0.0, 1}, radii({2.0, 1.0})), Error);
  CHECK_THROWS_AS(kernel_invert({SymbolKind::S, 1.5, 1.0, 0.0, 1}, radii({0.0})), Error);
  const SymbolSpec s{SymbolKind::S, 1.5, 1.0, 0.0, 1};
  CHECK_THROWS_WITH_AS(fit_asymptotic_law(kernel_invert(s, fit_radii(s, 5.0, 5.2, 3))),
                       doctest::Contains("insufficient-oscillations"), Error);
}

TEST_CASE("envelope of S grows linearly on [5, 50]") {
  const SymbolSpec s{SymbolKind::S, 1.5, 1.0, 0.0, 1};
  const AsymptoticLaw law = fit_asymptotic_law(kernel_invert(s, fit_radii(s, 5.0, 50.0, 12)));
  CHECK(law.p == doctest::Approx(1.0).epsilon(0.05));
  CHECK(law.q == doctest::Approx(4.0).epsilon(0.05));
  CHECK(law.r_min >= 5.0);
  CHECK(law.oscillations >= 5.0);
}

TEST_CASE("fitted exponents for S, Q and P at alpha = 1.5") {
  struct Row {
    SymbolKind kind;
    double theta, p;
  };
  for (const Row& row : {Row{SymbolKind::Q, 0.0, -3.0}, Row{SymbolKind::P, 0.0, -1.0}, Row{SymbolKind::S, 2.0, -5.0}}) {
    const SymbolSpec s{row.kind, 1.5, 1.0, row.theta, 1};
    CHECK(decay_exponent(row.kind, 1.5, row.theta, 1) == doctest::Approx(row.p));
    const AsymptoticLaw law = fit_on_window(s);
    INFO("kind=" << to_string(row.kind) << " theta=" << row.theta);
    CHECK(law.p == doctest::Approx(row.p).epsilon(0.05));
    CHECK(law.q == doctest::Approx(phase_exponent(1.5)).epsilon(0.05));
    CHECK(law.B < 0.0);
  }
}

TEST_CASE("exponent table with Bessel smoothing") {
  // t = 20 lifts the steep envelopes above the quadrature floor while e^{-r} stays negligible.
  for (SymbolKind kind : {SymbolKind::S, SymbolKind::Q, SymbolKind::P}) {
    for (double alpha : {1.25, 1.5, 1.75}) {
      const AsymptoticLaw law = fit_on_window({kind, alpha, 20.0, 1.0, 1});
      INFO("kind=" << to_string(kind) << " alpha=" << alpha);
      CHECK(law.p == doctest::Approx(decay_exponent(kind, alpha, 1.0, 1)).epsilon(0.07));
      CHECK(law.q == doctest::Approx(phase_exponent(alpha)).epsilon(0.07));
    }
  }
}

TEST_CASE("M, N and L exponents at theta = 3") {
  for (SymbolKind kind : {SymbolKind::M, SymbolKind::N, SymbolKind::L}) {
    const AsymptoticLaw law = fit_on_window({kind, 1.5, 20.0, 3.0, 1});
    INFO("kind=" << to_string(kind));
    CHECK(law.p == doctest::Approx(decay_exponent(kind, 1.5, 3.0, 1)).epsilon(0.07));
    CHECK(law.q == doctest::Approx(4.0).epsilon(0.07));
  }
}

TEST_CASE("closed-form exponents") {
  CHECK(decay_exponent(SymbolKind::M, 1.5, 3.0, 1) == doctest::Approx(-2.0));
  CHECK(decay_exponent(SymbolKind::N, 1.5, 3.0, 1) == doctest::Approx(-6.0));
  CHECK(decay_exponent(SymbolKind::L, 1.5, 3.0, 1) == doctest::Approx(-4.0));
  CHECK(decay_exponent(SymbolKind::H, 1.5, 0.0, 1) == doctest::Approx(3.0));
  CHECK(phase_exponent(1.75) == doctest::Approx(8.0));
  const SymbolSpec s{SymbolKind::S, 1.5, 2.0, 0.0, 1};
  const double r = radius_for_saddle_phase(s, 1e4);
  const double rho = saddle_frequency(s, r);
  CHECK(2.0 * std::pow(rho, 4.0 / 3.0) / 3.0 == doctest::Approx(1e4));
}

TEST_CASE("small-x regimes") {
  const std::vector<double> r{1e-4, 1e-3, 1e-2};
  const SmallXReport s1 = small_x_behavior({SymbolKind::S, 1.5, 1.0, 0.0, 1}, r);
  CHECK(s1.predicted == SmallXRegime::bounded);
  CHECK(s1.matches);
  const SmallXReport s3 = small_x_behavior({SymbolKind::S, 1.5, 1.0, 1.0, 3}, r);
  CHECK(s3.predicted == SmallXRegime::log);
  CHECK(s3.matches);
  const SmallXReport p3 = small_x_behavior({SymbolKind::P, 1.5, 1.0, 0.0, 3}, r);
  CHECK(p3.predicted == SmallXRegime::bounded);
  CHECK(p3.matches);
  const SmallXReport q3 = small_x_behavior({SymbolKind::Q, 1.5, 1.0, 0.0, 3}, r);
  CHECK(q3.predicted == SmallXRegime::power);
  CHECK(q3.matches);
  CHECK(q3.observed_power == doctest::Approx(q3.predicted_power).epsilon(0.05));
}

TEST_CASE("Bessel potential kernel") {
  // n = 1, theta = 2: sqrt(pi / 2) e^{-r}.
  const KernelSample g = bessel_kernel_G(2.0, 1, radii({0.1, 1.0, 5.0, 12.0, 20.0}));
  for (Eigen::Index i = 0; i < g.radii.size(); ++i) {
    CHECK(g.values(i).imag() == 0.0);
    CHECK(g.values(i).real() == doctest::Approx(std::sqrt(M_PI / 2) * std::exp(-g.radii(i))).epsilon(1e-10));
  }
  // Total mass by quadrature in log r.
  Eigen::VectorXd r(401);
  for (int i = 0; i <= 400; ++i) r(i) = 1e-6 * std::pow(60.0 / 1e-6, i / 400.0);
  const KernelSample h = bessel_kernel_G(2.0, 1, r);
  double mass = 0.0;
  for (int i = 0; i < 400; ++i)
    mass += 0.5 * (h.values(i).real() * r(i) + h.values(i + 1).real() * r(i + 1)) * std::log(r(i + 1) / r(i));
  CHECK(2.0 * mass == doctest::Approx(std::sqrt(2 * M_PI)).epsilon(1e-4));
  // n = 3, theta = 1: r^{n - theta} G tends to a constant.
  const KernelSample s = bessel_kernel_G(1.0, 3, radii({1e-5, 1e-4, 1e-3}));
  const double c0 = s.values(0).real() * 1e-10, c1 = s.values(1).real() * 1e-8, c2 = s.values(2).real() * 1e-6;
  CHECK(std::abs(c0 - c1) < 0.2 * std::abs(c1 - c2));
  CHECK(c0 == doctest::Approx(c1).epsilon(1e-3));
}

TEST_CASE("mismatch radius") {
  const MismatchReport loose = mismatch_radius(SymbolKind::S, 1.5, 1.0, 1, 1e-1);
  const MismatchReport tight = mismatch_radius(SymbolKind::S, 1.5, 1.0, 1, 1e-2);
  CHECK(loose.sigma == doctest::Approx(1.0));
  CHECK(tight.radius >= loose.radius);
  CHECK(tight.tail <= 1e-2);
  CHECK(bound_tail_mass(1, tight.sigma, tight.constant, tight.radius) <= 1e-2);
  CHECK(mismatch_radius(SymbolKind::S, 1.5, 1.0, 1, 1e6).radius == 2.0);
  CHECK_THROWS_AS(mismatch_radius(SymbolKind::S, 1.5, 0.5, 1, 1e-2), Error);
}

TEST_CASE("L1 threshold scan brackets the predicted threshold") {
  const ThresholdScanReport r = l1_threshold_scan(SymbolKind::S, 1.5, 1, {0.45, 0.55, 0.65, 0.75, 0.85});
  CHECK(r.predicted == doctest::Approx(2.0 / 3.0));
  REQUIRE(r.conclusive);
  CHECK(std::abs(r.empirical - r.predicted) < 0.05);
  CHECK(r.entries.front().verdict == "divergent");
  CHECK(r.entries.back().verdict == "convergent");
  CHECK_THROWS_AS(l1_threshold_scan(SymbolKind::S, 1.5, 1, {0.5}), Error);
}

TEST_CASE("piecewise bound ratio stays flat at both ends of the radius range") {
  std::vector<double> r;
  for (int i = 0; i <= 12; ++i) r.push_back(0.05 * std::pow(1000.0, i / 12.0));
  const BoundReport b = piecewise_bound_check(SymbolKind::S, 1.5, 1.0, 1, {0.1, 1.0}, r);
  CHECK(b.finite);
  CHECK(b.sigma == doctest::Approx(1.0));
  CHECK(b.max_ratio < 5.0);
  for (size_t k = 0; k < 2; ++k) {
    const BoundRow* row = &b.rows[k * r.size()];
    CHECK(row[0].ratio == doctest::Approx(row[1].ratio).epsilon(0.05));
    CHECK(row[12].ratio == doctest::Approx(row[11].ratio).epsilon(0.05));
  }
  CHECK_THROWS_AS(piecewise_bound_check(SymbolKind::S, 1.5, 0.5, 1, {1.0}, r), Error);
}

TEST_CASE("direct tail mass sits below the bound tail") {
  const MismatchReport m = mismatch_radius(SymbolKind::S, 1.5, 1.0, 1, 1e-1);
  const double direct = direct_tail_mass({SymbolKind::S, 1.5, 0.5, 1.0, 1}, m.radius, 16.0 * m.radius);
  CHECK(direct > 0.0);
  CHECK(direct <= m.tail);
  CHECK_THROWS_AS(direct_tail_mass({SymbolKind::S, 1.5, 0.5, 1.0, 1}, 0.5, 10.0), Error);
}
