#include <doctest.h>

#include <cmath>
#include <vector>

#include "ml_oracle_table.hpp"
#include "mlfrac/special_functions.hpp"

using namespace mlfrac;

namespace {
double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("reciprocal gamma vanishes at poles") {
  CHECK(rgamma(0.0) == 0.0);
  CHECK(rgamma(-3.0) == 0.0);
  CHECK(rgamma(1.0) == doctest::Approx(1.0));
  CHECK(rgamma(0.5) == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-15));
  CHECK(rgamma(-0.5) == doctest::Approx(-0.5 / std::sqrt(M_PI)).epsilon(1e-15));
}

TEST_CASE("series at the origin returns 1/Gamma(beta)") {
  CHECK(ml_series({0, 0}, {1.5, 1.0}).value == cplx(1.0, 0.0));
  CHECK(ml_series({0, 0}, {1.5, 0.0}).value == cplx(0.0, 0.0));
  CHECK(ml_eval({0, 0}, {1.5, 2.5}).value.real() == doctest::Approx(rgamma(2.5)));
}

TEST_CASE("series reproduces exp and cos") {
  CHECK(rel_err(ml_series({1, 0}, {1.0, 1.0}).value, std::exp(1.0)) < 1e-15);
  CHECK(rel_err(ml_series({-4, 0}, {2.0, 1.0}).value, std::cos(2.0)) < 1e-14);
}

TEST_CASE("series error estimate bounds the change from a tighter tolerance") {
  for (cplx z : {cplx(3, 1), cplx(-10, 0), cplx(0, 20)}) {
    MLEvalReport loose = ml_series(z, {1.5, 1.0}, 1e-4);
    MLEvalReport tight = ml_series(z, {1.5, 1.0}, 1e-14);
    CHECK(std::abs(loose.value - tight.value) <= loose.est_abs_error + 1e-15);
  }
}

TEST_CASE("series reports divergence when powers overflow") {
  CHECK_THROWS_AS(ml_series({1e6, 0}, {1.1, 1.0}), Error);
}

TEST_CASE("asymptotic expansion reproduces exp for alpha one") {
  MLEvalReport r = ml_asymptotic({30, 0}, {1.0, 1.0}, 3);
  CHECK(rel_err(r.value, std::exp(30.0)) < 1e-10);
  CHECK(r.branch == MLBranch::asymptotic);
}

TEST_CASE("asymptotic expansion on the imaginary axis") {
  MLEvalReport r = ml_asymptotic({0, 50}, {1.5, 1.0}, 5);
  CHECK(rel_err(r.value, cplx(405.87789321477468536, -428.58591674999595854)) < 1e-6);
}

TEST_CASE("asymptotic rejects small arguments") {
  CHECK_THROWS_AS(ml_asymptotic({1, 0}, {1.5, 1.0}, 3), Error);
}

TEST_CASE("asymptotic minus leading term decays like 1/|z|") {
  const MLParams p{1.5, 1.5};
  const double th = p.alpha * M_PI / 4;
  double cmax = 0.0;
  for (double r = 50; r <= 200; r += 10) {
    cplx z = std::polar(r, th);
    cplx lead = (1 / p.alpha) * std::pow(z, (1 - p.beta) / p.alpha) * std::exp(std::pow(z, 1 / p.alpha));
    cmax = std::max(cmax, std::abs(ml_asymptotic(z, p).value - lead) * r);
  }
  CHECK(cmax < 1.0);
}

TEST_CASE("dispatcher matches the high-precision oracle table") {
  double worst = 0.0;
  for (const auto& row : kMLOracle) {
    cplx v = ml_eval(row.z, {row.alpha, row.beta}).value;
    double e = row.value == cplx(0, 0) ? std::abs(v) : rel_err(v, row.value);
    worst = std::max(worst, e);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("dispatcher on the negative real axis") {
  CHECK(rel_err(ml_eval({-2, 0}, {1.5, 1.0}).value, cplx(0.029430685602826471728, 0)) < 1e-10);
}

TEST_CASE("series and asymptotic agree on the symbol rays") {
  for (double a : {1.1, 1.5, 1.9}) {
    const double rho = switching_radius(a);
    for (double b : {1.0, 2.0, a, a - 1, 2 - a}) {
      for (double sgn : {1.0, -1.0}) {
        for (double f : {0.5, 0.8, 1.0, 1.3, 1.7, 2.0}) {
          cplx z = std::polar(f * rho, sgn * a * M_PI / 2);
          cplx s = ml_series(z, {a, b}).value;
          cplx as = ml_asymptotic(z, {a, b}, 12).value;
          CHECK(std::abs(s - as) < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("series recurrence in beta") {
  for (double a : {1.1, 1.5, 1.9}) {
    for (cplx z : {cplx(2, 1), cplx(-5, 0.5), cplx(0, 8), cplx(12, -3)}) {
      for (double b : {1.0, 0.5, 2.0}) {
        cplx lhs = ml_eval(z, {a, b}).value;
        cplx rhs = rgamma(b) + z * ml_eval(z, {a, a + b}).value;
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("critical ray boundedness") {
  const MLParams p{1.5, 1.0};
  double sup = 0.0;
  for (int i = 0; i <= 400; ++i) {
    double r = std::pow(10.0, 4.0 * i / 400);
    cplx w = std::polar(r, M_PI / 2);
    sup = std::max(sup, std::abs(std::pow(w, p.beta - 1) * ml_eval(std::pow(w, p.alpha), p).value));
  }
  CHECK(std::isfinite(sup));
  CHECK(sup < 2.0);
}

TEST_CASE("scaled derivative examples") {
  CHECK(rel_err(ml_scaled_derivative({2, 0}, {1.0, 1.0}, 1), std::exp(2.0)) < 1e-14);
  CHECK(rel_err(ml_scaled_derivative({1, 0}, {1.5, 2.0}, 1), cplx(1.9394872614337489665, 0)) < 1e-13);
  CHECK_THROWS_AS(ml_scaled_derivative({0, 0}, {1.5, 1.0}, 1), Error);
}

TEST_CASE("scaled derivative matches central differences") {
  const MLParams p{1.5, 1.5};
  auto f = [&](cplx w) { return std::pow(w, p.beta - 1) * ml_eval(std::pow(w, p.alpha), p).value; };
  const double h = 1e-5;
  cplx fd = (f({3 + h, 0}) - f({3 - h, 0})) / (2 * h);
  CHECK(rel_err(ml_scaled_derivative({3, 0}, p, 1), fd) < 1e-6);
  int n = 0;
  for (int i = 0; i < 20; ++i) {
    cplx w = std::polar(0.5 + 0.3 * i, -1.2 + 0.12 * i);
    cplx d = (f(w + h) - f(w - h)) / (2 * h);
    if (rel_err(ml_scaled_derivative(w, p, 1), d) < 1e-6) ++n;
  }
  CHECK(n == 20);
}
