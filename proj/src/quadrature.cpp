#include "mlfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace mlfrac {

namespace {

GaussRule build_rule(int n) {
  GaussRule g;
  g.x.resize(n);
  g.w.resize(n);
  g.bary.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    g.x[n - 1 - i] = x;
    g.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  for (int i = 0; i < n; ++i) {
    const double s = std::sqrt((1.0 - g.x[i] * g.x[i]) * g.w[i]);
    g.bary[i] = (i % 2 == 0) ? s : -s;
  }
  return g;
}

// QUADPACK qk15 abscissae and weights.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double error, gross;
};

Panel kronrod15(const std::function<cplx(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx fv[15];
  fv[7] = f(c);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  cplx resk = kWgk[7] * fv[7], resg = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }
  const cplx mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  double err = std::abs(resk - resg) * h;
  resasc *= h;
  resabs *= h;
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * resabs);
  if (!std::isfinite(err) || !std::isfinite(std::abs(resk))) err = std::numeric_limits<double>::infinity();
  return {a, b, resk * h, err, resabs};
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(build_rule(n));
  return *slot;
}

QuadResult integrate_adaptive(const std::function<cplx(double)>& f, const std::vector<double>& breaks,
                              double rel_tol, double abs_tol, int max_panels) {
  auto worse = [](const Panel& p, const Panel& q) { return p.error < q.error; };
  std::vector<Panel> heap;
  for (size_t i = 0; i + 1 < breaks.size(); ++i)
    if (breaks[i + 1] > breaks[i]) heap.push_back(kronrod15(f, breaks[i], breaks[i + 1]));
  std::make_heap(heap.begin(), heap.end(), worse);
  QuadResult res;
  for (;;) {
    cplx total(0.0, 0.0);
    double err = 0.0, gross = 0.0;
    for (const Panel& p : heap) {
      total += p.value;
      err += p.error;
      gross += p.gross;
    }
    res.value = total;
    res.error = err;
    res.panels = static_cast<int>(heap.size());
    if (heap.empty() || err <= std::max(abs_tol, rel_tol * gross)) {
      res.converged = std::isfinite(err);
      return res;
    }
    if (static_cast<int>(heap.size()) >= max_panels) {
      res.converged = false;
      return res;
    }
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), worse);
      res.converged = false;
      return res;
    }
    heap.push_back(kronrod15(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(kronrod15(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), worse);
  }
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mu;
  for (int k = 0; k < threads; ++k) {
    pool.emplace_back([&, k] {
      try {
        for (int i = k; i < n; i += threads) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace mlfrac
