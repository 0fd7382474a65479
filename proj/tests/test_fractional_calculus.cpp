#include <doctest.h>

#include <cmath>
#include <functional>

#include "mlfrac/fractional_calculus.hpp"

using namespace mlfrac;

namespace {

double sup_rel_window(const TimeSeries& d, const std::function<cplx(double)>& exact, double tmin) {
  double e = 0.0;
  for (Eigen::Index j = kCaputoLowOrderNodes; j < d.values.size(); ++j) {
    const double t = d.grid.nodes(j);
    if (t < tmin) continue;
    e = std::max(e, std::abs(d.values(j) - exact(t)) / std::abs(exact(t)));
  }
  return e;
}

double sup_abs_window(const TimeSeries& d, const std::function<cplx(double)>& exact, double tmin) {
  double e = 0.0;
  for (Eigen::Index j = kCaputoLowOrderNodes; j < d.values.size(); ++j)
    if (d.grid.nodes(j) >= tmin) e = std::max(e, std::abs(d.values(j) - exact(d.grid.nodes(j))));
  return e;
}

}  // namespace

TEST_CASE("g function values") {
  CHECK(g_function(1.0, 0.3) == doctest::Approx(1.0));
  CHECK(g_function(2.0, 3.5) == doctest::Approx(3.5));
  CHECK(g_function(0.5, 1.0) == doctest::Approx(0.5641895835477563).epsilon(1e-14));
  CHECK(g_function(1.5, -1.0) == 0.0);
  CHECK_THROWS_AS(g_function(0.0, 1.0), Error);
}

TEST_CASE("time grid rejects non-increasing nodes") {
  TimeGrid g;
  g.nodes = Eigen::VectorXd::LinSpaced(4, 0.0, 1.0);
  CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("RL integral of a constant is exact") {
  TimeGrid g = TimeGrid::make_uniform(1.0, 64);
  TimeSeries one = sample(g, [](double) { return cplx(1.0, 0.0); }, 1.0, 0.0);
  TimeSeries I = rl_integral(one, 1.0);
  for (Eigen::Index j = 0; j < 64; ++j) CHECK(std::abs(I.values(j) - g.nodes(j)) < 1e-14);
}

TEST_CASE("RL integral of t against the closed form") {
  TimeGrid g = TimeGrid::make_uniform(1.0, 512);
  TimeSeries f = sample(g, [](double t) { return cplx(t, 0.0); }, 0.0, 1.0);
  TimeSeries I = rl_integral(f, 0.5);
  double e = 0.0;
  for (Eigen::Index j = 0; j < 512; ++j) {
    const double t = g.nodes(j), ex = std::pow(t, 1.5) * rgamma(2.5);
    e = std::max(e, std::abs(I.values(j) - ex) / ex);
  }
  CHECK(e < 1e-3);
}

TEST_CASE("RL integral on a nonuniform grid") {
  TimeGrid g;
  g.nodes.resize(400);
  for (int j = 0; j < 400; ++j) g.nodes(j) = std::pow((j + 1) / 400.0, 2);
  TimeSeries f = sample(g, [](double t) { return cplx(t, 0.0); }, 0.0, 1.0);
  TimeSeries I = rl_integral(f, 0.5);
  double e = 0.0;
  for (Eigen::Index j = 0; j < 400; ++j) {
    const double t = g.nodes(j), ex = std::pow(t, 1.5) * rgamma(2.5);
    e = std::max(e, std::abs(I.values(j) - ex) / ex);
  }
  CHECK(e < 1e-12);
}

TEST_CASE("RL semigroup") {
  TimeGrid g = TimeGrid::make_uniform(1.0, 512);
  TimeSeries f = sample(g, [](double t) { return cplx(std::sin(t), 0.0); }, 0.0, 1.0);
  for (double a : {0.3, 0.5, 0.7}) {
    for (double b : {0.3, 0.5, 0.7}) {
      TimeSeries Ib = rl_integral(f, b);
      Ib.f0 = 0.0;
      TimeSeries lhs = rl_integral(Ib, a);
      TimeSeries rhs = rl_integral(f, a + b);
      CHECK((lhs.values - rhs.values).cwiseAbs().maxCoeff() < 1e-3 * rhs.values.cwiseAbs().maxCoeff());
    }
  }
}

TEST_CASE("Caputo annihilates affine functions") {
  TimeGrid g = TimeGrid::make_uniform(2.0, 256);
  const cplx a(0.3, -1.0), b(2.0, 0.5);
  TimeSeries f = sample(g, [&](double t) { return a + b * t; }, a, b);
  for (CaputoMethod m : {CaputoMethod::outer_d2, CaputoMethod::l1})
    CHECK(caputo_derivative(f, 1.5, m).values.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Caputo rejects short and nonuniform grids") {
  TimeSeries f = sample(TimeGrid::make_uniform(1.0, 4), [](double t) { return cplx(t, 0); }, 0.0, 1.0);
  CHECK_THROWS_AS(caputo_derivative(f, 1.5), Error);
  TimeGrid g = TimeGrid::make_uniform(1.0, 16);
  g.uniform = false;
  CHECK_THROWS_AS(caputo_derivative(sample(g, [](double t) { return cplx(t, 0); }, 0.0, 1.0), 1.5), Error);
}

TEST_CASE("Caputo of t squared") {
  const double a = 1.5;
  TimeGrid g = TimeGrid::make_uniform(1.0, 1024);
  TimeSeries f = sample(g, [](double t) { return cplx(t * t, 0.0); }, 0.0, 0.0);
  auto exact = [&](double t) { return cplx(2.0 * std::pow(t, 2 - a) * rgamma(3 - a), 0.0); };
  for (CaputoMethod m : {CaputoMethod::outer_d2, CaputoMethod::l1}) {
    TimeSeries d = caputo_derivative(f, a, m);
    double e = 0.0;
    for (Eigen::Index j = 8; j < 1024; ++j)
      e = std::max(e, std::abs(d.values(j) - exact(g.nodes(j))) / std::abs(exact(g.nodes(j))));
    CHECK(e < 1e-2);
  }
}

TEST_CASE("Mittag-Leffler profile is a Caputo eigenfunction") {
  const double a = 1.5;
  const cplx om = std::polar(1.0, -a * M_PI / 2);
  auto u = [&](double t) { return ml_eval(om * std::pow(t, a), {a, 1.0}).value; };
  TimeSeries f = sample(TimeGrid::make_uniform(2.0, 1024), u, 1.0, 0.0);
  for (CaputoMethod m : {CaputoMethod::outer_d2, CaputoMethod::l1})
    CHECK(sup_rel_window(caputo_derivative(f, a, m), [&](double t) { return om * u(t); }, 0.1) < 1e-2);
}

TEST_CASE("Caputo order on t cubed") {
  for (double a : {1.1, 1.5, 1.9}) {
    auto exact = [&](double t) { return cplx(6.0 * std::pow(t, 3 - a) * rgamma(4 - a), 0.0); };
    double prev = 0.0, order_min = 10.0;
    for (int N : {128, 256, 512, 1024}) {
      TimeSeries f = sample(TimeGrid::make_uniform(1.0, N), [](double t) { return cplx(t * t * t, 0); }, 0.0, 0.0);
      const double e = sup_abs_window(caputo_derivative(f, a), exact, 0.25);
      if (prev > 0.0) order_min = std::min(order_min, std::log2(prev / e));
      prev = e;
    }
    CHECK(order_min >= 1.5);
  }
}

TEST_CASE("the two Caputo paths agree within the L1 error estimate") {
  const double a = 1.5;
  auto f = [](double t) { return cplx(std::sin(2 * t), std::exp(-t) - 1 + t); };
  TimeSeries fine = sample(TimeGrid::make_uniform(1.0, 512), f, 0.0, 2.0);
  TimeSeries coarse = sample(TimeGrid::make_uniform(1.0, 256), f, 0.0, 2.0);
  TimeSeries outer = caputo_derivative(fine, a, CaputoMethod::outer_d2);
  TimeSeries l1 = caputo_derivative(fine, a, CaputoMethod::l1);
  TimeSeries l1c = caputo_derivative(coarse, a, CaputoMethod::l1);
  double diff = 0.0, est = 0.0;
  for (Eigen::Index j = 2 * kCaputoLowOrderNodes + 1; j < 512; j += 2) {
    diff = std::max(diff, std::abs(outer.values(j) - l1.values(j)));
    est = std::max(est, std::abs(l1.values(j) - l1c.values(j / 2)));
  }
  CHECK(diff < 10 * est);
}
