#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "mlfrac/acceptance.hpp"
#include "mlfrac/fractional_calculus.hpp"
#include "mlfrac/holder_metrics.hpp"
#include "mlfrac/kernel_lab.hpp"
#include "mlfrac/solver.hpp"
#include "mlfrac/special_functions.hpp"
#include "mlfrac/symbols.hpp"

#ifndef MLFRAC_VERSION
#define MLFRAC_VERSION "0.0.0"
#endif

using json = nlohmann::ordered_json;
using namespace mlfrac;
namespace fs = std::filesystem;

namespace {

// Bad input: exit status 2 with the offending key path.
struct UsageError : std::runtime_error {
  UsageError(const std::string& path, const std::string& what) : std::runtime_error(path + ": " + what) {}
};

bool is_usage_code(const std::string& code) {
  static const std::set<std::string> usage{"asymptotic-out-of-range", "bad-field-file", "dirac-not-pointwise",
                                           "grid-mismatch", "grid-too-short", "nonuniform-grid", "singular-at-origin",
                                           "singular-time", "size-mismatch"};
  return code.rfind("invalid", 0) == 0 || code.rfind("unsupported", 0) == 0 || usage.count(code) > 0;
}

// Shortest form that keeps 17 significant digits and always reads as a real number.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eni") == std::string::npos) s += ".0";
  return s;
}

std::string cplx_text(cplx z) {
  if (z.imag() == 0.0) return num(z.real());
  return num(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

// JSON text with every floating-point number at 17 significant digits.
void write_json(std::string& out, const json& j, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' '), end_pad(static_cast<size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::object:
    case json::value_t::array: {
      const bool obj = j.is_object();
      if (j.empty()) {
        out += obj ? "{}" : "[]";
        return;
      }
      out += obj ? "{\n" : "[\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        if (obj) out += json(it.key()).dump() + ": ";
        write_json(out, it.value(), indent, depth + 1);
      }
      out += "\n" + end_pad + (obj ? "}" : "]");
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? num(v) : "null";
      return;
    }
    default: out += j.dump();
  }
}

std::string json_text(const json& j) {
  std::string out;
  write_json(out, j, 2, 0);
  return out + "\n";
}

json cplx_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// "a", "a+bi", "a-bi", "bi", "i", "-i".
cplx parse_cplx(const std::string& text, const std::string& path) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  static const std::string real = R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))";
  static const std::regex full("^" + real + "([+-](?:\\d+\\.?\\d*|\\.\\d+)?(?:[eE][+-]?\\d+)?)i$");
  static const std::regex re_only("^" + real + "$");
  static const std::regex im_only(R"(^([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i$)");
  auto coef = [](std::string c) {
    if (c.empty() || c == "+") return 1.0;
    if (c == "-") return -1.0;
    return std::stod(c);
  };
  std::smatch m;
  if (std::regex_match(s, m, re_only)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(s, m, full)) return {std::stod(m[1]), coef(m[2])};
  if (std::regex_match(s, m, im_only)) return {0.0, coef(m[1])};
  throw UsageError(path, "not a complex number: '" + text + "'");
}

int env_threads() {
  const char* v = std::getenv("MLFRAC_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) throw UsageError("MLFRAC_THREADS", std::string("expected a positive integer, got '") + v + "'");
  return static_cast<int>(n);
}

// Parameters of one subcommand: defaults, overridden by flags, overridden by the --config file.
class Params {
 public:
  void add(CLI::App* app, const std::string& path, json def, const std::string& flag, const std::string& help) {
    entries_.push_back(Entry{path, def, "", false, nullptr});
    Entry& e = entries_.back();
    if (def.is_boolean())
      e.opt = app->add_flag(flag, e.flag, help);
    else
      e.opt = app->add_option(flag, e.raw, help)->default_str(def.is_string() ? def.get<std::string>() : def.dump());
    set(values_, path, def);
  }

  // Key without a flag of its own; its value comes from set_value or the config file.
  void declare(const std::string& path, json def) { set(values_, path, std::move(def)); }
  void set_value(const std::string& path, json v) { set(values_, path, std::move(v)); }

  void resolve(const std::string& config_path) {
    for (const Entry& e : entries_)
      if (e.opt->count() > 0) set(values_, e.path, from_flag(e));
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw UsageError("--config", "cannot open '" + config_path + "'");
    json cfg;
    try {
      cfg = json::parse(in);
    } catch (const json::parse_error& ex) {
      throw UsageError("--config", ex.what());
    }
    if (!cfg.is_object()) throw UsageError("(root)", "config must be a JSON object");
    merge(values_, cfg, "");
  }

  const json& resolved() const { return values_; }
  const json& at(const std::string& path) const { return *find(path); }
  double number(const std::string& p) const { return at(p).get<double>(); }
  int integer(const std::string& p) const {
    const long long v = at(p).get<long long>();
    if (v < INT_MIN || v > INT_MAX) throw UsageError(p, "integer out of range");
    return static_cast<int>(v);
  }
  std::uint64_t u64(const std::string& p) const {
    if (at(p).is_number_integer() && at(p).get<long long>() < 0) throw UsageError(p, "must be non-negative");
    return at(p).get<std::uint64_t>();
  }
  std::string text(const std::string& p) const { return at(p).get<std::string>(); }
  bool flag(const std::string& p) const { return at(p).get<bool>(); }
  std::vector<double> numbers(const std::string& p) const { return at(p).get<std::vector<double>>(); }
  SymbolKind kind(const std::string& p) const {
    try {
      return parse_symbol_kind(text(p));
    } catch (const Error& e) {
      throw UsageError(p, e.what());
    }
  }
  double positive(const std::string& p) const {
    const double v = number(p);
    if (!(v > 0.0)) throw UsageError(p, "must be positive");
    return v;
  }
  int positive_int(const std::string& p) const {
    const int v = integer(p);
    if (v < 1) throw UsageError(p, "must be a positive integer");
    return v;
  }

 private:
  struct Entry {
    std::string path;
    json def;
    std::string raw;
    bool flag;
    CLI::Option* opt;
  };

  static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
    return out;
  }

  static void set(json& root, const std::string& path, const json& v) {
    json* node = &root;
    for (const std::string& k : split(path, '.')) node = &(*node)[k];
    *node = v;
  }

  const json* find(const std::string& path) const {
    const json* node = &values_;
    for (const std::string& k : split(path, '.')) node = &node->at(k);
    return node;
  }

  static double to_double(const std::string& s, const std::string& path) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError(path, "not a number: '" + s + "'");
    return v;
  }

  static json from_flag(const Entry& e) {
    const std::string& s = e.raw;
    if (e.def.is_boolean()) return e.flag;
    if (e.def.is_string()) return s;
    if (e.def.is_array()) {
      json a = json::array();
      for (const std::string& item : split(s, ',')) a.push_back(to_double(item, e.path));
      return a;
    }
    if (e.def.is_number_integer() || e.def.is_number_unsigned()) {
      size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size()) throw UsageError(e.path, "not an integer: '" + s + "'");
      return v;
    }
    return to_double(s, e.path);
  }

  static void check_type(const json& def, const json& v, const std::string& path) {
    auto fail = [&](const char* what) { throw UsageError(path, std::string("expected ") + what); };
    if (def.is_boolean() && !v.is_boolean()) fail("a boolean");
    if (def.is_string() && !v.is_string()) fail("a string");
    if ((def.is_number_integer() || def.is_number_unsigned()) && !(v.is_number_integer() || v.is_number_unsigned()))
      fail("an integer");
    if (def.is_number_float() && !v.is_number()) fail("a number");
    if (def.is_array()) {
      if (!v.is_array()) fail("an array of numbers");
      for (const json& x : v)
        if (!x.is_number()) fail("an array of numbers");
    }
  }

  static void merge(json& target, const json& src, const std::string& prefix) {
    for (auto it = src.begin(); it != src.end(); ++it) {
      const std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (!target.contains(it.key())) throw UsageError(path, "unknown key");
      json& dst = target[it.key()];
      if (dst.is_object()) {
        if (!it.value().is_object()) throw UsageError(path, "expected an object");
        merge(dst, it.value(), path);
      } else {
        check_type(dst, it.value(), path);
        dst = it.value().is_number() && dst.is_number_float() ? json(it.value().get<double>()) : it.value();
      }
    }
  }

  std::deque<Entry> entries_;
  json values_ = json::object();
};

// Options shared by every subcommand.
struct Globals {
  std::string config;
  std::string output_dir = ".";
  std::uint64_t seed = 7;
  bool output_dir_given = false;
};

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  Params params;
  std::function<int(Command&)> run;
};

json artifact(const Command& c, json result) {
  return json{{"tool", "mlfrac"}, {"version", MLFRAC_VERSION}, {"command", c.name}, {"config", c.params.resolved()},
              {"result", std::move(result)}};
}

fs::path output_dir(const Command& c) {
  const fs::path dir = c.params.text("output_dir");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("io-error", "cannot create " + dir.string());
  return dir;
}

void write_text(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) throw Error("io-error", "cannot write " + path.string());
}

// CSV with the tool version and the resolved config in leading comment lines.
std::string csv_header(const Command& c, const std::string& columns) {
  return std::string("# mlfrac ") + MLFRAC_VERSION + " " + c.name + "\n# config " + c.params.resolved().dump() + "\n" +
         columns + "\n";
}

// Prints the artifact and also stores it when an output directory was requested.
int emit(const Command& c, const Globals& g, const std::string& file, json result) {
  const json a = artifact(c, std::move(result));
  std::cout << json_text(a);
  if (g.output_dir_given) write_text(output_dir(c) / file, json_text(a));
  return 0;
}

SymbolSpec spec_from(const Params& p) {
  SymbolSpec s{p.kind("kind"), p.number("alpha"), p.number("t"), p.number("theta"), p.integer("dim")};
  try {
    s.validate();
  } catch (const Error& e) {
    throw UsageError("kind/alpha/t/theta/dim", e.what());
  }
  return s;
}

void add_spec(Command& c, const std::string& kind = "S", double t = 1.0) {
  c.params.add(c.app, "kind", kind, "--kind", "symbol kind: S, Q, P, M, N, L, H, S1");
  c.params.add(c.app, "alpha", 1.5, "--alpha", "fractional order");
  c.params.add(c.app, "t", t, "--t", "time");
  c.params.add(c.app, "theta", 0.0, "--theta", "Bessel smoothing order");
  c.params.add(c.app, "dim", 1, "--dim", "space dimension");
}

KernelOptions kernel_options() {
  KernelOptions o;
  o.threads = env_threads();
  return o;
}

Eigen::VectorXd radius_grid(const Params& p) {
  const double r0 = p.positive("r_min"), r1 = p.positive("r_max");
  const int n = p.positive_int("points");
  if (!(r1 > r0)) throw UsageError("r_max", "must exceed r_min");
  Eigen::VectorXd r(n);
  for (int i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.0 : double(i) / (n - 1);
    r(i) = p.flag("log") ? r0 * std::pow(r1 / r0, f) : r0 + (r1 - r0) * f;
  }
  return r;
}

// ---- ml ----

int run_ml_eval(Command& c, const Globals& g) {
  const Params& p = c.params;
  const MLParams mp{p.number("alpha"), p.number("beta")};
  const cplx z = parse_cplx(p.text("z"), "z");
  const std::string branch = p.text("branch");
  MLEvalReport r;
  if (branch == "auto")
    r = ml_eval(z, mp);
  else if (branch == "series")
    r = ml_series(z, mp);
  else if (branch == "asymptotic")
    r = ml_asymptotic(z, mp, p.positive_int("terms"));
  else
    throw UsageError("branch", "expected auto, series or asymptotic");
  if (!p.flag("json")) {
    std::cout << cplx_text(r.value) << "\n";
    return 0;
  }
  return emit(c, g, "ml_eval.json",
              {{"value", cplx_json(r.value)},
               {"branch", r.branch == MLBranch::series ? "series" : "asymptotic"},
               {"terms_used", r.terms_used},
               {"est_abs_error", r.est_abs_error}});
}

// ---- frac ----

// Samples t^power on a uniform grid, or reads t,re,im rows from a CSV file.
TimeSeries frac_input(const Params& p) {
  const std::string input = p.text("input");
  if (input.empty()) {
    const double a = p.number("power");
    if (a < 0.0) throw UsageError("power", "must be non-negative");
    const TimeGrid grid = TimeGrid::make_uniform(p.positive("T"), p.positive_int("steps"));
    const cplx f0 = a == 0.0 ? 1.0 : 0.0, df0 = a == 1.0 ? 1.0 : 0.0;
    if (a > 0.0 && a < 1.0) throw UsageError("power", "t^power has no finite derivative at 0 for 0 < power < 1");
    return sample(grid, [a](double t) { return cplx(std::pow(t, a), 0.0); }, f0, df0);
  }
  std::ifstream in(input);
  if (!in) throw UsageError("input", "cannot open '" + input + "'");
  std::vector<double> t;
  std::vector<cplx> v;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
    double a = 0, b = 0, d = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &a, &b, &d) != 3) throw UsageError("input", "bad row '" + line + "'");
    t.push_back(a);
    v.emplace_back(b, d);
  }
  TimeSeries s;
  s.grid.nodes = Eigen::Map<Eigen::VectorXd>(t.data(), static_cast<Eigen::Index>(t.size()));
  s.grid.t0 = 0.0;
  if (t.size() >= 2) {
    const double h = t[0];
    s.grid.uniform = true;
    for (size_t j = 1; j < t.size(); ++j)
      if (std::abs(t[j] - t[j - 1] - h) > 1e-9 * h) s.grid.uniform = false;
  }
  s.values = Eigen::Map<Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
  s.f0 = parse_cplx(p.text("f0"), "f0");
  s.df0 = parse_cplx(p.text("df0"), "df0");
  try {
    s.grid.validate();
  } catch (const Error& e) {
    throw UsageError("input", e.what());
  }
  return s;
}

void add_frac(Command& c, const char* order_key, double order) {
  c.params.add(c.app, order_key, order, std::string("--") + order_key, "order");
  c.params.add(c.app, "input", "", "--input", "CSV with t,re,im rows on t_1 < ... < t_N; empty: sample t^power");
  c.params.add(c.app, "f0", "0", "--f0", "f(0) for --input");
  c.params.add(c.app, "df0", "0", "--df0", "f'(0) for --input");
  c.params.add(c.app, "power", 2.0, "--power", "sampled function t^power (0, 1 or > 1)");
  c.params.add(c.app, "T", 1.0, "--T", "final time");
  c.params.add(c.app, "steps", 256, "--steps", "uniform steps");
}

int finish_frac(Command& c, const Globals& g, const TimeSeries& out, double exact_order) {
  const Params& p = c.params;
  const std::string name = c.name == "frac caputo" ? "caputo" : "rl";
  std::string body = csv_header(c, "t,re,im");
  double err = -1.0;
  const bool closed = p.text("input").empty();
  const double a = p.number("power");
  for (Eigen::Index j = 0; j < out.values.size(); ++j) {
    const double t = out.grid.nodes(j);
    body += num(t) + "," + num(out.values(j).real()) + "," + num(out.values(j).imag()) + "\n";
    if (closed) {
      // Order exact_order applied to t^a; a = 0 or 1 lies in the Caputo kernel.
      double e = 0.0;
      if (!(name == "caputo" && a < 2.0 && (a == 0.0 || a == 1.0)))
        e = std::tgamma(a + 1.0) / std::tgamma(a + 1.0 + exact_order) * std::pow(t, a + exact_order);
      err = std::max(err, std::abs(out.values(j) - e));
    }
  }
  const fs::path csv = output_dir(c) / (name + ".csv");
  write_text(csv, body);
  json result{{"csv", csv.string()}, {"nodes", out.values.size()}};
  if (closed) result["sup_error_vs_closed_form"] = err;
  return emit(c, g, name + ".json", result);
}

int run_frac_caputo(Command& c, const Globals& g) {
  const Params& p = c.params;
  const std::string m = p.text("method");
  if (m != "outer_d2" && m != "l1") throw UsageError("method", "expected outer_d2 or l1");
  const double alpha = p.number("alpha");
  const TimeSeries out =
      caputo_derivative(frac_input(p), alpha, m == "l1" ? CaputoMethod::l1 : CaputoMethod::outer_d2);
  return finish_frac(c, g, out, -alpha);
}

int run_frac_rl(Command& c, const Globals& g) {
  const double order = c.params.number("order");
  return finish_frac(c, g, rl_integral(frac_input(c.params), order), order);
}

// ---- symbol ----

int run_symbol_eval(Command& c, const Globals& g) {
  const SymbolSpec s = spec_from(c.params);
  const std::vector<double> xi = c.params.numbers("xi");
  if (static_cast<int>(xi.size()) != s.dim) throw UsageError("xi", "needs dim = " + std::to_string(s.dim) + " entries");
  const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(xi.data(), s.dim);
  return emit(c, g, "symbol_eval.json", {{"xi_norm", v.norm()}, {"value", cplx_json(symbol_eval(s, v))}});
}

int run_symbol_expand(Command& c, const Globals& g) {
  const SymbolSpec s = spec_from(c.params);
  const double rho = c.params.positive("xi");
  const int m = c.params.positive_int("terms");
  const cplx exact = symbol_radial(s, rho), approx = symbol_large_xi(s, rho, m);
  return emit(c, g, "symbol_expand.json",
              {{"xi", rho},
               {"terms", m},
               {"exact", cplx_json(exact)},
               {"expansion", cplx_json(approx)},
               {"abs_difference", std::abs(exact - approx)}});
}

int run_symbol_probe(Command& c, const Globals& g) {
  const Params& p = c.params;
  const int order = p.integer("order");
  if (order != 1 && order != 2) throw UsageError("order", "expected 1 or 2");
  const DerivativeProbeReport r = symbol_derivative_bound_probe(p.kind("kind"), p.number("alpha"), order, p.numbers("xi"));
  return emit(c, g, "symbol_probe.json",
              {{"xi", r.xi}, {"ratio", r.ratio}, {"sup_ratio", r.sup_ratio}, {"log_slope", r.log_slope}});
}

int run_symbol_identity(Command& c, const Globals& g) {
  const Params& p = c.params;
  const TimeGrid grid = TimeGrid::make_uniform(p.positive("T"), p.positive_int("steps"));
  const TimeIdentityReport r = symbol_time_identity_check(p.number("alpha"), p.number("xi"), grid);
  return emit(c, g, "symbol_identity.json",
              {{"sup_first_derivative_gap", r.sup_first_derivative_gap},
               {"sup_fractional_gap", r.sup_fractional_gap},
               {"sup_fractional_gap_unscaled", r.sup_fractional_gap_unscaled}});
}

// ---- kernel ----

void add_radii(Command& c, double r0, double r1, int points, bool log) {
  c.params.add(c.app, "r_min", r0, "--r-min", "smallest radius");
  c.params.add(c.app, "r_max", r1, "--r-max", "largest radius");
  c.params.add(c.app, "points", points, "--points", "number of radii");
  c.params.add(c.app, "log", log, "--log", "geometric spacing");
}

int run_kernel_sample(Command& c, const Globals& g) {
  const KernelSample s = kernel_invert(spec_from(c.params), radius_grid(c.params), kernel_options());
  std::string body = csv_header(c, "r,re,im,abs,quad_err");
  int unconverged = 0;
  for (Eigen::Index i = 0; i < s.radii.size(); ++i) {
    body += num(s.radii(i)) + "," + num(s.values(i).real()) + "," + num(s.values(i).imag()) + "," +
            num(std::abs(s.values(i))) + "," + num(s.quad_error(i)) + "\n";
    unconverged += s.converged[i] ? 0 : 1;
  }
  const fs::path csv = output_dir(c) / "kernel_sample.csv";
  write_text(csv, body);
  return emit(c, g, "kernel_sample.json",
              {{"csv", csv.string()}, {"points", s.radii.size()}, {"unconverged", unconverged},
               {"max_quad_err", s.quad_error.maxCoeff()}});
}

int run_kernel_fit(Command& c, const Globals& g) {
  const SymbolSpec s = spec_from(c.params);
  double r0 = c.params.number("r_min"), r1 = c.params.number("r_max");
  if (r0 <= 0.0 || r1 <= 0.0) std::tie(r0, r1) = fit_window(s);
  if (!(r1 > r0)) throw UsageError("r_max", "must exceed r_min");
  const AsymptoticLaw law =
      fit_asymptotic_law(kernel_invert(s, fit_radii(s, r0, r1, c.params.positive_int("pairs")), kernel_options()));
  return emit(c, g, "kernel_fit.json",
              {{"p", law.p},
               {"q", law.q},
               {"A", law.A},
               {"B", law.B},
               {"c", law.c},
               {"r_min", law.r_min},
               {"r_max", law.r_max},
               {"residual", law.residual},
               {"oscillations", law.oscillations},
               {"predicted_p", decay_exponent(s.kind, s.alpha, s.theta, s.dim)},
               {"predicted_q", phase_exponent(s.alpha)}});
}

int run_kernel_scan(Command& c, const Globals& g) {
  const Params& p = c.params;
  const ThresholdScanReport r = l1_threshold_scan(p.kind("kind"), p.number("alpha"), p.integer("dim"),
                                                  p.numbers("theta_list"), p.positive("r_max"), kernel_options());
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back({{"theta", e.theta}, {"tail_slope", e.tail_slope}, {"verdict", e.verdict}});
  return emit(c, g, "kernel_scan.json",
              {{"predicted", r.predicted}, {"empirical", r.empirical}, {"conclusive", r.conclusive}, {"entries", entries}});
}

int run_kernel_bounds(Command& c, const Globals& g) {
  const Params& p = c.params;
  const Eigen::VectorXd r = radius_grid(p);
  const BoundReport b = piecewise_bound_check(p.kind("kind"), p.number("alpha"), p.number("theta"), p.integer("dim"),
                                              p.numbers("t_list"), std::vector<double>(r.data(), r.data() + r.size()),
                                              kernel_options());
  std::string body = csv_header(c, "t,r,value,bound,ratio");
  for (const BoundRow& row : b.rows)
    body += num(row.t) + "," + num(row.r) + "," + num(row.value) + "," + num(row.bound) + "," + num(row.ratio) + "\n";
  const fs::path csv = output_dir(c) / "kernel_bounds.csv";
  write_text(csv, body);
  return emit(c, g, "kernel_bounds.json",
              {{"csv", csv.string()}, {"sigma", b.sigma}, {"max_ratio", b.max_ratio}, {"finite", b.finite}});
}

int run_kernel_mismatch(Command& c, const Globals& g) {
  const Params& p = c.params;
  const SymbolKind kind = p.kind("kind");
  const double alpha = p.number("alpha"), theta = p.number("theta");
  const int n = p.integer("dim");
  const MismatchReport m = mismatch_radius(kind, alpha, theta, n, p.positive("delta"), kernel_options());
  json checks = json::array();
  for (double t : p.numbers("verify_t")) {
    if (!(t > 0.0 && t < 1.0)) throw UsageError("verify_t", "times must lie in (0, 1)");
    const double tail = direct_tail_mass({kind, alpha, t, theta, n}, m.radius, 16.0 * m.radius, kernel_options());
    checks.push_back({{"t", t}, {"direct_tail", tail}});
  }
  return emit(c, g, "kernel_mismatch.json",
              {{"radius", m.radius}, {"constant", m.constant}, {"bound_tail", m.tail}, {"sigma", m.sigma},
               {"direct", checks}});
}

int run_kernel_smallx(Command& c, const Globals& g) {
  const SmallXReport r = small_x_behavior(spec_from(c.params), c.params.numbers("radii"), kernel_options());
  return emit(c, g, "kernel_smallx.json",
              {{"predicted", to_string(r.predicted)},
               {"observed", to_string(r.observed)},
               {"predicted_power", r.predicted_power},
               {"observed_power", r.observed_power},
               {"growth_ratio", r.growth_ratio},
               {"matches", r.matches},
               {"radii", r.radii},
               {"abs_values", r.abs_values}});
}

// ---- solve ----

Field builtin_field(const SpatialGrid& g, const std::string& name, const std::string& path) {
  const cplx I(0.0, 1.0);
  if (name == "zero") return Field::zeros(g);
  if (name == "gaussian")
    return Field::sample(g, [](const Eigen::VectorXd& x) { return cplx(std::exp(-0.5 * x.squaredNorm()), 0.0); });
  if (name == "plane-wave") return Field::sample(g, [I](const Eigen::VectorXd& x) { return std::exp(I * x(0)); });
  if (name == "two-modes")
    return Field::sample(g, [](const Eigen::VectorXd& x) { return cplx(std::cos(x(0)), std::sin(2.0 * x(0))); });
  if (!fs::exists(name)) throw UsageError(path, "neither a builtin (zero, gaussian, plane-wave, two-modes) nor a file: '" + name + "'");
  Field f = read_field(name);
  if (!(f.grid == g)) throw UsageError(path, "field file grid differs from grid.{n,N,L}");
  return f;
}

Forcing builtin_forcing(const SpatialGrid& g, const std::string& name, double alpha) {
  const cplx I(0.0, 1.0);
  if (name == "zero") return {};
  const Field wave = Field::sample(g, [I](const Eigen::VectorXd& x) { return std::exp(I * x(0)); });
  if (name == "manufactured") {
    // Forcing for u = (1 + t^2) e^{i x_0} with u0 = plane-wave, u1 = zero.
    if (alpha == 1.0) throw UsageError("data.f", "manufactured forcing needs 1 < alpha < 2");
    return [wave, alpha](double t) {
      const cplx amp = i_pow(alpha) * 2.0 * std::pow(t, 2.0 - alpha) / std::tgamma(3.0 - alpha) - (1.0 + t * t);
      return Field{wave.grid, amp * wave.values};
    };
  }
  if (name == "growing-wave") return [wave](double t) { return Field{wave.grid, (1.0 + t) * wave.values}; };
  throw UsageError("data.f", "expected zero, manufactured or growing-wave: '" + name + "'");
}

int run_solve(Command& c, const Globals&) {
  const Params& p = c.params;
  SpatialGrid grid{p.integer("grid.n"), p.integer("grid.N"), p.number("grid.L")};
  try {
    grid.validate();
  } catch (const Error& e) {
    throw UsageError("grid", e.what());
  }
  SolveConfig cfg;
  cfg.alpha = p.number("alpha");
  cfg.times = TimeGrid::make_uniform(p.positive("times.T"), p.positive_int("times.steps"));
  cfg.duhamel_nodes = p.integer("duhamel_nodes");
  cfg.dealias = p.flag("dealias");
  cfg.threads = env_threads();
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw UsageError("alpha/duhamel_nodes", e.what());
  }
  const Field u0 = builtin_field(grid, p.text("data.u0"), "data.u0");
  const Field u1 = builtin_field(grid, p.text("data.u1"), "data.u1");
  const Forcing f = builtin_forcing(grid, p.text("data.f"), cfg.alpha);
  const std::string base = p.text("output");
  if (base.empty() || base.find('/') != std::string::npos) throw UsageError("output", "expected a plain file name");

  const Trajectory tr = solve_mild(u0, u1, f, cfg);
  const fs::path dir = output_dir(c);
  write_field((dir / (base + ".mlf")).string(), tr.fields.back());
  json result{{"field", (dir / (base + ".mlf")).string()}, {"warnings", tr.warnings}};
  if (grid.dim == 1) {
    std::string body = csv_header(c, "x,re,im");
    const Field& u = tr.fields.back();
    for (int i = 0; i < grid.N; ++i)
      body += num(grid.coordinate(i)) + "," + num(u.values(i).real()) + "," + num(u.values(i).imag()) + "\n";
    write_text(dir / (base + ".csv"), body);
    result["csv"] = (dir / (base + ".csv")).string();
  }
  json sups = json::array();
  for (const Field& u : tr.fields) sups.push_back(u.sup_norm());
  result["times"] = std::vector<double>(cfg.times.nodes.data(), cfg.times.nodes.data() + cfg.times.nodes.size());
  result["sup_norm"] = sups;
  if (p.flag("residual")) {
    const ResidualReport r = residual(tr, u0, u1, f, cfg);
    result["residual_sup"] = std::vector<double>(r.sup_norm.data(), r.sup_norm.data() + r.sup_norm.size());
    result["residual_interior_sup"] = r.interior_sup;
  }
  for (const std::string& w : tr.warnings) std::cerr << "warning: " << w << "\n";
  const json a = artifact(c, result);
  write_text(dir / (base + ".json"), json_text(a));
  std::cout << json_text(a);
  return 0;
}

// ---- holder ----

int run_holder_norm(Command& c, const Globals& g) {
  const Params& p = c.params;
  Field f;
  const std::string input = p.text("input");
  if (!input.empty()) {
    if (!fs::exists(input)) throw UsageError("input", "no such file '" + input + "'");
    f = read_field(input);
  } else {
    f = weierstrass_sum(SpatialGrid{1, p.positive_int("N"), M_PI}, p.number("s_prime"), p.positive_int("level"), p.u64("seed"));
  }
  HolderOptions o;
  o.seed = p.u64("seed");
  o.threads = env_threads();
  const HolderEstimate e = holder_norm(f, p.number("s"), o);
  return emit(c, g, "holder_norm.json",
              {{"s", e.s},
               {"estimate", e.total},
               {"sup_norms", e.sup_norms},
               {"seminorm", e.seminorm},
               {"pairs_sampled", e.pairs_sampled}});
}

int run_holder_probe(Command& c, const Globals& g) {
  const Params& p = c.params;
  ProbeConfig cfg;
  cfg.s = p.number("s");
  cfg.level_min = p.integer("level_min");
  cfg.level_max = p.integer("level_max");
  cfg.members = p.integer("members");
  cfg.sharpness_offset = p.number("sharpness_offset");
  cfg.t = p.positive("t");
  cfg.seed = p.u64("seed");
  cfg.holder.threads = env_threads();
  const SymbolKind kind = p.kind("kind");
  const ProbeReport r = multiplier_gain_probe(kind, kind == SymbolKind::S1 ? 1.0 : p.number("alpha"), cfg);
  return emit(c, g, "holder_probe.json",
              {{"s", cfg.s},
               {"gain", r.gain},
               {"grid", {{"n", r.grid.dim}, {"N", r.grid.N}, {"L", r.grid.L}}},
               {"levels", r.levels},
               {"max_ratio_by_level", r.ratio},
               {"sharp_ratio_by_level", r.sharp_ratio},
               {"estimate", r.max_ratio},
               {"ratio_growth", r.ratio_growth},
               {"sharp_growth", r.sharp_growth},
               {"sharp_monotone", r.sharp_monotone},
               {"pairs_sampled", r.pairs_sampled}});
}

// ---- verify ----

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int run_verify(Command& c, const Globals&) {
  const Params& p = c.params;
  AcceptanceOptions o;
  try {
    o.profile = parse_profile(p.text("profile"));
  } catch (const Error&) {
    throw UsageError("profile", "expected fast or strict");
  }
  o.threads = env_threads();
  o.seed = p.u64("seed");
  json checks = json::array();
  bool ok = true;
  run_acceptance(o, [&](const Check& k) {
    std::fprintf(stderr, "%-16s %-7s %.17g  %s (%.1f s)\n", k.id.c_str(), k.status.c_str(), k.observed,
                 k.detail.c_str(), k.seconds);
    ok = ok && k.status != "fail";
    checks.push_back({{"id", k.id},
                      {"paper_ref", k.topic},
                      {"status", k.status},
                      {"observed", std::isfinite(k.observed) ? json(k.observed) : json(nullptr)},
                      {"expected", opt_json(k.expected)},
                      {"tolerance", opt_json(k.tolerance)},
                      {"detail", k.detail}});
  });
  json report{{"tool", "mlfrac"}, {"version", MLFRAC_VERSION}, {"command", c.name}, {"config", p.resolved()},
              {"checks", checks}};
  const fs::path path = output_dir(c) / "report.json";
  write_text(path, json_text(report));
  std::cout << path.string() << ": " << (ok ? "all checks pass" : "some checks fail") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mittag-Leffler symbols, kernels and fractional Schroedinger-type evolution"};
  app.set_version_flag("--version", MLFRAC_VERSION);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "JSON file whose keys override the flags");
  auto* dir_opt = app.add_option("--output-dir", g.output_dir, "directory for artifacts");
  app.add_option("--seed", g.seed, "seed for randomized families");

  std::deque<Command> commands;
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& help,
                     std::function<int(Command&, const Globals&)> run) -> Command& {
    commands.push_back(Command{full, parent->add_subcommand(name, help), {}, {}});
    Command& c = commands.back();
    c.run = [run, &g](Command& cc) { return run(cc, g); };
    // Shared keys: root flags, then the config file.
    c.params.declare("output_dir", ".");
    c.params.declare("seed", 7);
    return c;
  };

  CLI::App* ml = app.add_subcommand("ml", "Mittag-Leffler function");
  {
    Command& c = command(ml, "eval", "ml eval", "evaluate E_{alpha,beta}(z)", run_ml_eval);
    c.params.add(c.app, "alpha", 1.5, "--alpha", "alpha in (0, 2]");
    c.params.add(c.app, "beta", 1.0, "--beta", "beta");
    c.params.add(c.app, "z", "0", "--z", "complex argument, e.g. 1.5-2i");
    c.params.add(c.app, "branch", "auto", "--branch", "auto, series or asymptotic");
    c.params.add(c.app, "terms", 6, "--terms", "algebraic terms of the asymptotic branch");
    c.params.add(c.app, "json", false, "--json", "print the full report");
  }
  CLI::App* frac = app.add_subcommand("frac", "fractional calculus on time series");
  {
    Command& c = command(frac, "caputo", "frac caputo", "Caputo derivative, 1 < alpha < 2", run_frac_caputo);
    add_frac(c, "alpha", 1.5);
    c.params.add(c.app, "method", "outer_d2", "--method", "outer_d2 or l1");
    Command& r = command(frac, "rl", "frac rl", "Riemann-Liouville integral", run_frac_rl);
    add_frac(r, "order", 0.5);
  }
  CLI::App* symbol = app.add_subcommand("symbol", "solution symbols");
  {
    Command& e = command(symbol, "eval", "symbol eval", "symbol value at a frequency vector", run_symbol_eval);
    add_spec(e);
    e.params.add(e.app, "xi", json::array({1.0}), "--xi", "frequency vector, comma separated");
    Command& x = command(symbol, "expand", "symbol expand", "large-frequency expansion against the exact value",
                         run_symbol_expand);
    add_spec(x);
    x.params.add(x.app, "xi", 50.0, "--xi", "|xi|");
    x.params.add(x.app, "terms", 3, "--terms", "algebraic corrections");
    Command& p = command(symbol, "probe", "symbol probe", "derivative bounds of the symbol in xi", run_symbol_probe);
    p.params.add(p.app, "kind", "S", "--kind", "symbol kind");
    p.params.add(p.app, "alpha", 1.5, "--alpha", "fractional order");
    p.params.add(p.app, "order", 1, "--order", "derivative order, 1 or 2");
    p.params.add(p.app, "xi", json::array({10.0, 30.0, 100.0, 300.0, 1000.0}), "--xi", "|xi| samples");
    Command& i = command(symbol, "identity", "symbol identity", "time identities between Q, S and P",
                         run_symbol_identity);
    i.params.add(i.app, "alpha", 1.5, "--alpha", "fractional order");
    i.params.add(i.app, "xi", 2.0, "--xi", "|xi|");
    i.params.add(i.app, "T", 1.0, "--T", "final time");
    i.params.add(i.app, "steps", 512, "--steps", "uniform steps");
  }
  CLI::App* kernel = app.add_subcommand("kernel", "convolution kernels");
  {
    Command& s = command(kernel, "sample", "kernel sample", "kernel values on a radius grid (CSV)", run_kernel_sample);
    add_spec(s);
    add_radii(s, 0.1, 20.0, 200, false);
    Command& f = command(kernel, "fit", "kernel fit", "fit |x|^p exp(-i B |x|^q) at large |x|", run_kernel_fit);
    add_spec(f);
    f.params.add(f.app, "r_min", 0.0, "--r-min", "window start; 0 picks the default window");
    f.params.add(f.app, "r_max", 0.0, "--r-max", "window end; 0 picks the default window");
    f.params.add(f.app, "pairs", 12, "--pairs", "radius pairs in the window");
    Command& sc = command(kernel, "scan", "kernel scan", "L1 integrability threshold in theta", run_kernel_scan);
    sc.params.add(sc.app, "kind", "S", "--kind", "symbol kind");
    sc.params.add(sc.app, "alpha", 1.5, "--alpha", "fractional order");
    sc.params.add(sc.app, "dim", 1, "--dim", "space dimension");
    sc.params.add(sc.app, "theta_list", json::array({0.4, 0.5, 0.6, 0.7, 0.8, 0.9}), "--theta-list",
                  "theta values, comma separated");
    sc.params.add(sc.app, "r_max", 1024.0, "--r-max", "end of the tail window [r_max / 16, r_max]");
    Command& b = command(kernel, "bounds", "kernel bounds", "kernel against its piecewise bound", run_kernel_bounds);
    b.params.add(b.app, "kind", "S", "--kind", "S, Q or P");
    b.params.add(b.app, "alpha", 1.5, "--alpha", "fractional order");
    b.params.add(b.app, "theta", 1.0, "--theta", "Bessel smoothing order");
    b.params.add(b.app, "dim", 1, "--dim", "space dimension");
    b.params.add(b.app, "t_list", json::array({0.1, 0.5, 0.9, 1.0, 4.0}), "--t-list", "times, comma separated");
    add_radii(b, 0.05, 50.0, 49, true);
    Command& m = command(kernel, "mismatch", "kernel mismatch", "radius holding all but delta of the kernel mass",
                         run_kernel_mismatch);
    m.params.add(m.app, "kind", "S", "--kind", "S, Q or P");
    m.params.add(m.app, "alpha", 1.5, "--alpha", "fractional order");
    m.params.add(m.app, "theta", 1.0, "--theta", "Bessel smoothing order");
    m.params.add(m.app, "dim", 1, "--dim", "space dimension");
    m.params.add(m.app, "delta", 1e-2, "--delta", "tail mass target");
    m.params.add(m.app, "verify_t", json::array({0.25, 0.5, 0.75}), "--verify-t", "times for direct tail quadrature");
    Command& x = command(kernel, "smallx", "kernel smallx", "behavior of the kernel near the origin", run_kernel_smallx);
    add_spec(x);
    x.params.add(x.app, "radii", json::array({1e-4, 1e-3, 1e-2}), "--radii", "small radii, comma separated");
  }
  {
    Command& s = command(&app, "solve", "solve", "mild solution on a periodic box", run_solve);
    s.params.add(s.app, "alpha", 1.5, "--alpha", "1 or 1 < alpha < 2");
    s.params.add(s.app, "grid.n", 1, "--dim", "space dimension");
    s.params.add(s.app, "grid.N", 64, "--points", "points per axis");
    s.params.add(s.app, "grid.L", M_PI, "--half-width", "box [-L, L)^n");
    s.params.add(s.app, "times.T", 1.0, "--T", "final time");
    s.params.add(s.app, "times.steps", 64, "--steps", "uniform steps");
    s.params.add(s.app, "data.u0", "gaussian", "--u0", "zero, gaussian, plane-wave, two-modes or an MLF1 file");
    s.params.add(s.app, "data.u1", "zero", "--u1", "as --u0");
    s.params.add(s.app, "data.f", "zero", "--f", "zero, manufactured or growing-wave");
    s.params.add(s.app, "duhamel_nodes", 4, "--duhamel-nodes", "forcing samples per step");
    s.params.add(s.app, "dealias", false, "--dealias", "zero the top third of the data spectra");
    s.params.add(s.app, "residual", false, "--residual", "also report the equation residual");
    s.params.add(s.app, "output", "solution", "--output", "base name of the output files");
  }
  CLI::App* holder = app.add_subcommand("holder", "Hoelder norms");
  {
    Command& n = command(holder, "norm", "holder norm", "C^s norm estimate of a field", run_holder_norm);
    n.params.add(n.app, "s", 0.5, "--s", "order s in [0, 4)");
    n.params.add(n.app, "input", "", "--input", "MLF1 field file; empty: a Weierstrass sum");
    n.params.add(n.app, "N", 1024, "--N", "points of the Weierstrass sum");
    n.params.add(n.app, "s_prime", 0.5, "--s-prime", "decay 2^(-k s') of the Weierstrass sum");
    n.params.add(n.app, "level", 8, "--level", "terms of the Weierstrass sum");
    Command& p = command(holder, "probe", "holder probe", "derivative gain of a solution multiplier", run_holder_probe);
    p.params.add(p.app, "kind", "S", "--kind", "S, Q, P or S1");
    p.params.add(p.app, "alpha", 1.5, "--alpha", "fractional order (ignored for S1)");
    p.params.add(p.app, "t", 1.0, "--t", "time");
    p.params.add(p.app, "s", 0.5, "--s", "target order s");
    p.params.add(p.app, "level_min", 4, "--level-min", "first level j");
    p.params.add(p.app, "level_max", 9, "--level-max", "last level j");
    p.params.add(p.app, "members", 4, "--members", "random-phase members per level");
    p.params.add(p.app, "sharpness_offset", 0.25, "--sharpness-offset", "order above s in the sharpness probe");
  }
  {
    Command& v = command(&app, "verify", "verify", "acceptance suite; writes report.json", run_verify);
    v.params.add(v.app, "profile", "fast", "--profile", "fast or strict");
  }
  // Root options (--config, --output-dir, --seed) may follow the subcommand.
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (Command& c : commands) {
      if (!c.app->parsed()) continue;
      c.params.set_value("output_dir", g.output_dir);
      c.params.set_value("seed", g.seed);
      c.params.resolve(g.config);
      g.output_dir_given = dir_opt->count() > 0 || c.params.text("output_dir") != ".";
      return c.run(c);
    }
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << (is_usage_code(e.code()) ? "usage error: " : "error: ") << e.what() << "\n";
    return is_usage_code(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
