#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "mlfrac/solver.hpp"
#include "mlfrac/symbols.hpp"

using namespace mlfrac;

namespace {

const cplx I(0.0, 1.0);

SpatialGrid line(int N = 32) { return SpatialGrid{1, N, M_PI}; }

Field plane_wave(const SpatialGrid& g, double k, cplx amp = 1.0) {
  return Field::sample(g, [&](const Eigen::VectorXd& x) { return amp * std::exp(I * k * x(0)); });
}

SolveConfig config(double alpha, double T, int steps, int duhamel = 4) {
  SolveConfig c;
  c.alpha = alpha;
  c.times = TimeGrid::make_uniform(T, steps);
  c.duhamel_nodes = duhamel;
  return c;
}

// Manufactured u = (1 + t^2) e^{ix}.
Forcing manufactured_forcing(const SpatialGrid& g, double alpha) {
  return [g, alpha](double t) {
    const cplx amp = i_pow(alpha) * 2.0 * std::pow(t, 2.0 - alpha) / std::tgamma(3.0 - alpha) - (1.0 + t * t);
    return plane_wave(g, 1.0, amp);
  };
}

double window_sup(const ResidualReport& r, const TimeGrid& times, double from) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < times.nodes.size(); ++j)
    if (times.nodes(j) >= from) s = std::max(s, r.sup_norm(j));
  return s;
}

}  // namespace

TEST_CASE("solver: grid layout and transforms") {
  const SpatialGrid g{2, 8, 2.0};
  CHECK(g.size() == 64);
  CHECK(g.coordinate(0) == doctest::Approx(-2.0));
  CHECK(g.frequency(3) == doctest::Approx(3 * M_PI / 2));
  CHECK(g.frequency(5) == doctest::Approx(-3 * M_PI / 2));
  CHECK(g.unflatten(11) == std::vector<int>{1, 3});
  const Field u = Field::sample(g, [](const Eigen::VectorXd& x) { return cplx(std::sin(x(0)) + x(1), x(0) * x(1)); });
  CHECK((fft_inverse(g, fft_forward(g, u.values)) - u.values).cwiseAbs().maxCoeff() < 1e-13);

  const SpatialGrid g3{3, 16, M_PI};
  const Field w = Field::sample(g3, [](const Eigen::VectorXd& x) { return std::exp(I * (x(0) + 2 * x(1) - 3 * x(2))); });
  CHECK((laplacian(w).values + 14.0 * w.values).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("solver: validation errors") {
  const SpatialGrid g = line();
  const Field z = Field::zeros(g);
  CHECK_THROWS_WITH_AS(solve_mild(z, z, {}, config(2.0, 1, 8)), doctest::Contains("invalid-alpha"), Error);
  CHECK_THROWS_WITH_AS(solve_mild(z, z, {}, config(0.9, 1, 8)), doctest::Contains("invalid-alpha"), Error);
  CHECK_THROWS_WITH_AS(solve_mild(z, z, {}, config(1.5, 1, 8, 2)), doctest::Contains("invalid-config"), Error);
  CHECK_THROWS_WITH_AS((SpatialGrid{1, 12, 1.0}.validate()), doctest::Contains("invalid-grid"), Error);
  CHECK_THROWS_WITH_AS(solve_mild(z, Field::zeros(line(16)), {}, config(1.5, 1, 8)), doctest::Contains("grid-mismatch"),
                       Error);
}

TEST_CASE("solver: constant data is preserved and u1 = c grows like c t") {
  const SpatialGrid g = line();
  const cplx c(0.7, -0.2);
  const Field cst = plane_wave(g, 0.0, c), z = Field::zeros(g);
  const SolveConfig cfg = config(1.5, 2.0, 16);
  const Trajectory a = solve_mild(cst, z, {}, cfg);
  const Trajectory b = solve_mild(z, cst, {}, cfg);
  for (int j = 0; j < 16; ++j) {
    const double t = cfg.times.nodes(j);
    CHECK((a.fields[j].values.array() - c).abs().maxCoeff() < 1e-13);
    CHECK((b.fields[j].values.array() - c * t).abs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("solver: single modes match the Mittag-Leffler symbols") {
  for (int dim : {1, 2}) {
    const SpatialGrid g{dim, 16, M_PI};
    const Eigen::Vector2d k(2.0, -3.0);
    auto wave = [&](const Eigen::VectorXd& x) {
      double phase = 0.0;
      for (int a = 0; a < dim; ++a) phase += k(a) * x(a);
      return std::exp(I * phase);
    };
    const double k2 = dim == 1 ? 4.0 : 13.0;
    const Field e = Field::sample(g, wave);
    const SolveConfig cfg = config(1.5, 1.5, 6);
    const Trajectory tu = solve_mild(e, Field::zeros(g), {}, cfg);
    const Trajectory tv = solve_mild(Field::zeros(g), e, {}, cfg);
    for (int j = 0; j < 6; ++j) {
      const double t = cfg.times.nodes(j);
      const cplx z = i_pow(-1.5) * k2 * std::pow(t, 1.5);
      const cplx s = ml(z, {1.5, 1.0}), q = t * ml(z, {1.5, 2.0});
      CHECK((tu.fields[j].values - s * e.values).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((tv.fields[j].values - q * e.values).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("solver: alpha = 1 is the Schroedinger flow") {
  const SpatialGrid g = line();
  const Field e = plane_wave(g, 3.0);
  const SolveConfig cfg = config(1.0, 1.0, 8);
  const Trajectory tr = solve_mild(e, plane_wave(g, 1.0), {}, cfg);
  for (int j = 0; j < 8; ++j) {
    const double t = cfg.times.nodes(j);
    CHECK((tr.fields[j].values - std::exp(-9.0 * I * t) * e.values).cwiseAbs().maxCoeff() < 1e-13);
  }
  REQUIRE(tr.warnings.size() == 1);
  CHECK(tr.warnings[0].find("u1 ignored") != std::string::npos);
}

TEST_CASE("solver: alpha just above 1 is continuous with the Schroedinger flow") {
  const SpatialGrid g = line();
  const Field e = plane_wave(g, 2.0);
  const Trajectory a = solve_mild(e, Field::zeros(g), {}, config(1.0 + 1e-3, 1.0, 4));
  const Trajectory b = solve_mild(e, Field::zeros(g), {}, config(1.0, 1.0, 4));
  CHECK((a.fields[3].values - b.fields[3].values).cwiseAbs().maxCoeff() < 2e-2);
  const Trajectory c = solve_mild(e, Field::zeros(g), {}, config(1.0 + 1e-4, 1.0, 4));
  CHECK((c.fields[3].values - b.fields[3].values).cwiseAbs().maxCoeff() <
        0.2 * (a.fields[3].values - b.fields[3].values).cwiseAbs().maxCoeff());
  const Trajectory one = solve_mild(plane_wave(g, 1.0), Field::zeros(g), {}, config(1.0 + 1e-3, 1.0, 4));
  CHECK((one.fields[3].values - std::exp(-I) * plane_wave(g, 1.0).values).cwiseAbs().maxCoeff() < 1e-2);
}

TEST_CASE("solver: alpha = 1 matches the free Schroedinger propagator on a Gaussian") {
  // e^{-x^2 / (4a)} evolves to sqrt(a / (a + i t)) e^{-x^2 / (4 (a + i t))}.
  const SpatialGrid g{1, 512, 24.0};
  const double a = 0.5;
  const Field u0 = Field::sample(g, [a](const Eigen::VectorXd& x) { return cplx(std::exp(-x(0) * x(0) / (4 * a))); });
  const Trajectory tr = solve_mild(u0, Field::zeros(g), {}, config(1.0, 1.0, 2));
  const cplx w = a + I * 1.0;
  const Field exact = Field::sample(g, [&](const Eigen::VectorXd& x) { return std::sqrt(a / w) * std::exp(-x(0) * x(0) / (4.0 * w)); });
  CHECK((tr.fields[1].values - exact.values).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("solver: manufactured solution with forcing") {
  const SpatialGrid g = line(16);
  for (double alpha : {1.25, 1.5, 1.75}) {
    CAPTURE(alpha);
    const SolveConfig cfg = config(alpha, 1.0, 64);
    const Field u0 = plane_wave(g, 1.0);
    const Trajectory tr = solve_mild(u0, Field::zeros(g), manufactured_forcing(g, alpha), cfg);
    double err = 0.0;
    for (int j = 0; j < 64; ++j) {
      const double t = cfg.times.nodes(j);
      err = std::max(err, (tr.fields[j].values - (1.0 + t * t) * u0.values).cwiseAbs().maxCoeff());
    }
    CHECK(err < 1e-3);
  }
}

TEST_CASE("solver: Duhamel term is second order for smooth forcing") {
  const SpatialGrid g = line(16);
  const Forcing f = [g](double t) { return plane_wave(g, 1.0, std::cos(t)); };
  const Field z = Field::zeros(g);
  const cplx ref = solve_mild(z, z, f, config(1.5, 1.0, 4, 256)).fields[3].values(0);
  double prev = 0.0;
  for (int m : {4, 8, 16}) {
    const double err = std::abs(solve_mild(z, z, f, config(1.5, 1.0, 4, m)).fields[3].values(0) - ref);
    if (prev > 0.0) CHECK(std::log2(prev / err) >= 1.9);
    prev = err;
  }
}

TEST_CASE("solver: linearity and grid translation") {
  const SpatialGrid g = line();
  auto bump = [&](double c) {
    return Field::sample(g, [c](const Eigen::VectorXd& x) { return cplx(std::exp(std::cos(x(0) - c)), 0.0); });
  };
  const Field a = bump(0.0), b = plane_wave(g, 2.0, cplx(0.3, 0.1));
  const SolveConfig cfg = config(1.5, 1.0, 4);
  const Trajectory ta = solve_mild(a, b, {}, cfg), tb = solve_mild(b, a, {}, cfg);
  const Trajectory tab = solve_mild(Field{g, 2.0 * a.values + b.values}, Field{g, 2.0 * b.values + a.values}, {}, cfg);
  CHECK((tab.fields[3].values - 2.0 * ta.fields[3].values - tb.fields[3].values).cwiseAbs().maxCoeff() < 1e-12);

  // Shifting the data by one grid cell shifts the solution by one cell.
  const double shift = g.spacing();
  const Trajectory t0 = solve_mild(a, Field::zeros(g), {}, cfg);
  const Trajectory t1 = solve_mild(bump(shift), Field::zeros(g), {}, cfg);
  double err = 0.0;
  for (int i = 0; i < g.N; ++i) err = std::max(err, std::abs(t1.fields[3].values((i + 1) % g.N) - t0.fields[3].values(i)));
  CHECK(err < 1e-12);
}

TEST_CASE("solver: residual is small and converges on the late window") {
  const SpatialGrid g = line(16);
  const Field u0 = Field::sample(g, [](const Eigen::VectorXd& x) { return std::exp(I * x(0)) + 0.5 * std::exp(-2.0 * I * x(0)); });
  const Field u1 = plane_wave(g, 1.0, 0.3);
  const Field z = Field::zeros(g);
  double coarse = 0.0;
  for (int nt : {512, 1024}) {
    const SolveConfig cfg = config(1.5, 1.0, nt);
    const ResidualReport r = residual(solve_mild(u0, u1, {}, cfg), u0, u1, {}, cfg);
    const double late = window_sup(r, cfg.times, 0.25);
    if (nt == 1024) {
      CHECK(window_sup(r, cfg.times, 0.1) < 1e-2);
      CHECK(std::log2(coarse / late) >= 1.5);
    }
    coarse = late;
  }
  // With forcing.
  const SolveConfig cfg = config(1.5, 1.0, 1024);
  const Forcing f = manufactured_forcing(g, 1.5);
  const ResidualReport r = residual(solve_mild(plane_wave(g, 1.0), z, f, cfg), plane_wave(g, 1.0), z, f, cfg);
  CHECK(window_sup(r, cfg.times, 0.1) < 1e-2);
}

TEST_CASE("solver: initial traces") {
  const SpatialGrid g = line(16);
  std::vector<double> times;
  for (int j = 1; j <= 10; ++j) times.push_back(std::ldexp(1.0, -j));
  const Field z = Field::zeros(g);
  const Field u0 = Field::sample(g, [](const Eigen::VectorXd& x) { return cplx(std::cos(x(0)), std::sin(2 * x(0))); });
  const Field u1 = plane_wave(g, 1.0, 0.5);

  SolveConfig cfg = config(1.5, 1.0, 8);
  const TraceReport disp = initial_trace_check(u0, u1, {}, cfg, times);
  CHECK(disp.displacement_monotone);
  CHECK(disp.displacement_error.back() < 1e-3);

  const TraceReport vel = initial_trace_check(z, u1, {}, cfg, times);
  CHECK(vel.velocity_monotone);
  CHECK(vel.velocity_error.back() < 1e-3);

  const Forcing f = [g](double t) { return plane_wave(g, 2.0, 1.0 + t); };
  // Forcing adds about t^(alpha - 1) to the velocity, so only the decay is checked.
  const TraceReport forced = initial_trace_check(z, u1, f, cfg, times);
  CHECK(forced.displacement_monotone);
  CHECK(forced.velocity_monotone);

  const TraceReport flat = initial_trace_check(plane_wave(g, 0.0, 2.0), z, {}, cfg, times);
  for (double e : flat.displacement_error) CHECK(e < 1e-14);

  cfg.alpha = 1.0;
  const TraceReport schr = initial_trace_check(u0, z, {}, cfg, times);
  CHECK(schr.velocity_error.empty());
  CHECK(schr.displacement_monotone);
  CHECK(schr.displacement_error.back() < 1e-2);
}

TEST_CASE("solver: point evaluation matches the trajectory and its time derivative") {
  const SpatialGrid g = line(16);
  const Field u0 = plane_wave(g, 2.0), u1 = plane_wave(g, 1.0, 0.4);
  const Forcing f = [g](double t) { return plane_wave(g, 1.0, std::cos(3 * t)); };
  const SolveConfig cfg = config(1.5, 1.0, 8, 4);
  const double t = 0.6, h = 1e-3;
  auto u_at = [&](double s) { return evaluate_at(u0, u1, f, cfg, s).displacement.values; };
  const State st = evaluate_at(u0, u1, f, cfg, t);
  const Eigen::VectorXcd fd = (u_at(t + h) - u_at(t - h)) / (2 * h);
  CHECK((st.velocity.values - fd).cwiseAbs().maxCoeff() < 1e-5);

  // Same sub-cells as the point evaluation.
  const SolveConfig on_grid = config(1.5, 1.2, 2, 64 * 4);
  const Trajectory tr = solve_mild(u0, u1, f, on_grid);
  CHECK((tr.fields[0].values - st.displacement.values).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("solver: MLF1 round trip and CSV") {
  const SpatialGrid g{2, 8, 1.5};
  const Field u = Field::sample(g, [](const Eigen::VectorXd& x) { return cplx(x(0), std::exp(x(1))); });
  const auto dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "mlfrac_field_roundtrip.mlf").string();
  write_field(path, u);
  const Field back = read_field(path);
  CHECK(back.grid == g);
  CHECK(back.values == u.values);
  CHECK(std::filesystem::file_size(path) == 4 + 4 + 4 + 8 + 64 * 16);
  std::filesystem::remove(path);

  const std::string csv = (dir / "mlfrac_field.csv").string();
  write_field_csv(csv, plane_wave(line(8), 1.0));
  CHECK(std::filesystem::file_size(csv) > 0);
  std::filesystem::remove(csv);
  CHECK_THROWS_WITH_AS(read_field(csv), doctest::Contains("io-error"), Error);
}

TEST_CASE("solver: aliasing warning and dealiasing") {
  const SpatialGrid g = line(32);
  const Field rough = plane_wave(g, 14.0);
  SolveConfig cfg = config(1.5, 0.5, 2);
  const Trajectory warned = solve_mild(rough, Field::zeros(g), {}, cfg);
  REQUIRE(warned.warnings.size() == 1);
  CHECK(warned.warnings[0].find("aliasing") != std::string::npos);
  CHECK(solve_mild(plane_wave(g, 3.0), Field::zeros(g), {}, cfg).warnings.empty());
  cfg.dealias = true;
  const Trajectory cleaned = solve_mild(rough, Field::zeros(g), {}, cfg);
  CHECK(cleaned.warnings.empty());
  CHECK(cleaned.fields[1].sup_norm() < 1e-14);
}

TEST_CASE("solver: thread count does not change the result") {
  const SpatialGrid g{2, 16, M_PI};
  const Field u0 = Field::sample(g, [](const Eigen::VectorXd& x) { return cplx(std::exp(std::cos(x(0)) * std::sin(x(1))), 0.0); });
  SolveConfig cfg = config(1.5, 1.0, 4);
  cfg.threads = 1;
  const Trajectory a = solve_mild(u0, Field::zeros(g), {}, cfg);
  cfg.threads = 4;
  const Trajectory b = solve_mild(u0, Field::zeros(g), {}, cfg);
  CHECK(a.fields[3].values == b.fields[3].values);
}
