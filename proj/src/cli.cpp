#include "hypgreen/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hypgreen/gjms_green.hpp"
#include "hypgreen/quadrature.hpp"
#include "hypgreen/sweep.hpp"
#include "hypgreen/verify.hpp"

namespace hypgreen::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::optional<int> n, k, k0, l;
  std::string sigma = "0";
  sweep::GridSpec grid;
  std::string spacing = "geometric";
  std::vector<double> eps;
  std::optional<double> tol;
  std::vector<std::string> only;
  int k_max = 5;
  std::string format = "csv";
  std::string out_path;
  bool serial = false;

  sweep::ExecPolicy policy() const { return serial ? sweep::ExecPolicy::serial : sweep::ExecPolicy::parallel; }

  json to_json() const {
    json j{{"command", command}, {"format", format}, {"serial", serial}};
    auto opt = [&](const char* key, const std::optional<int>& v) { j[key] = v ? json(*v) : json(nullptr); };
    opt("n", n);
    opt("k", k);
    opt("k0", k0);
    opt("l", l);
    j["sigma"] = sigma;
    j["rho_grid"] = {{"min", grid.min}, {"max", grid.max}, {"count", grid.count}, {"spacing", spacing}};
    if (command == "verify") {
      j["eps"] = eps;
      j["tol"] = tol ? json(*tol) : json(nullptr);
      j["only"] = only;
    }
    if (command == "lambda-table") j["k_max"] = k_max;
    return j;
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;  // numbers, strings or null
  json residuals = json::object();
  bool pass = true;
};

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  std::string s = v.get<std::string>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void emit(const RunConfig& cfg, const Table& t, std::ostream& out) {
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = r[i];
      rows.push_back(o);
    }
    json doc{{"config", cfg.to_json()}, {"rows", rows}, {"residuals", t.residuals}, {"pass", t.pass}};
    out << doc.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << cell(r[i]);
    out << "\n";
  }
}

Shift parse_sigma(const std::string& s) {
  if (s == "0") return Shift::zero;
  if (s == "1/2" || s == "0.5" || s == "half") return Shift::half;
  throw DomainError("--sigma must be 0 or 1/2, got '" + s + "'");
}

Table cmd_green(const RunConfig& cfg) {
  if (!cfg.n) throw DomainError("green requires --n");
  Dimension dim(*cfg.n);
  const bool product = cfg.l.has_value();
  if (product == cfg.k.has_value())
    throw DomainError("green requires exactly one of --k (GJMS order) or --l (product length)");
  auto rhos = cfg.grid.points();
  Table t;
  if (product) {
    ProductSpec spec{cfg.k0.value_or(0), parse_sigma(cfg.sigma), *cfg.l};
    spec.check(dim);
    auto table = sweep::product_table(dim, spec, rhos, cfg.policy());
    t.columns = {"rho", "product_green"};
    for (auto [rho, v] : table.samples) t.rows.push_back({rho, v});
    t.pass = table.positive_decreasing();
    t.residuals["positive_decreasing"] = t.pass;
    return t;
  }
  if (cfg.k0 || cfg.sigma != "0") throw DomainError("--k0/--sigma apply only with --l");
  GjmsOrder k(*cfg.k);
  k.check(dim);
  if (dim.n() < 3) throw DomainError("green requires n >= 3");
  auto rows = sweep::green_table(dim, k, rhos, cfg.policy());
  t.columns = {"rho", "pk_green", "pk_green_bound", "gap", "rel_gap"};
  double min_rel = INFINITY, max_rel = -INFINITY;
  for (const auto& r : rows) {
    t.rows.push_back({r.rho, r.pk, r.bound, r.gap, r.rel_gap});
    min_rel = std::min(min_rel, r.rel_gap);
    max_rel = std::max(max_rel, r.rel_gap);
  }
  t.residuals["min_rel_gap"] = min_rel;
  t.residuals["max_rel_gap"] = max_rel;
  t.pass = min_rel >= -1e-13;
  return t;
}

Table cmd_verify(const RunConfig& cfg) {
  verify::Options opts;
  opts.only = cfg.only;
  opts.tol = cfg.tol;
  if (!cfg.eps.empty()) opts.eps_sweep = cfg.eps;
  opts.policy = cfg.policy();
  auto checks = verify::run_battery(opts);
  Table t;
  t.columns = {"group", "name", "max_residual", "tolerance", "samples", "pass"};
  for (const auto& c : checks) {
    t.rows.push_back({c.group, c.name, number(c.max_residual), c.tolerance, c.samples, c.pass});
    t.residuals[c.name] = number(c.max_residual);
    t.pass = t.pass && c.pass;
  }
  return t;
}

Table cmd_lambda_table(const RunConfig& cfg) {
  auto rows = sweep::lambda_table(cfg.k_max, cfg.policy());
  Table t;
  t.columns = {"n", "k", "lambda_lower_bound", "neg_hardy_product", "closed_form", "error"};
  double worst_closed = 0.0;
  for (const auto& r : rows) {
    t.rows.push_back({r.n, r.k, number(r.bound), r.neg_hardy, number(r.closed),
                      r.error.empty() ? json(nullptr) : json(r.error)});
    t.pass = t.pass && r.error.empty() && r.bound > r.neg_hardy;
    if (std::isfinite(r.closed)) worst_closed = std::max(worst_closed, std::fabs(r.bound - r.closed));
  }
  t.residuals["max_closed_form_error"] = number(worst_closed);
  t.pass = t.pass && worst_closed < 1e-8;
  return t;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Green's functions of GJMS operators on hyperbolic space", "hypgreen"};
  app.set_config("--config", "", "key=value file mirroring the command-line options");
  app.require_subcommand(1, 1);
  app.add_option("--n", cfg.n, "dimension");
  app.add_option("--k", cfg.k, "GJMS order");
  app.add_option("--k0", cfg.k0, "product start index");
  app.add_option("--sigma", cfg.sigma, "product shift, 0 or 1/2");
  app.add_option("--l", cfg.l, "product length");
  app.add_option("--rho-min", cfg.grid.min, "smallest rho")->capture_default_str();
  app.add_option("--rho-max", cfg.grid.max, "largest rho")->capture_default_str();
  app.add_option("--rho-count", cfg.grid.count, "number of rho points")->capture_default_str();
  app.add_option("--spacing", cfg.spacing, "rho spacing")
      ->check(CLI::IsMember({"geometric", "linear"}))
      ->capture_default_str();
  app.add_option("--eps", cfg.eps, "eps sweep for the asymptotic checks")->delimiter(',');
  app.add_option("--tol", cfg.tol, "replace every verification tolerance");
  app.add_option("--only", cfg.only, "verification groups to run")->delimiter(',');
  app.add_option("--k-max", cfg.k_max, "largest k in the lambda table")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", cfg.out_path, "output file (default: standard output)");
  app.add_flag("--serial", cfg.serial, "disable the OpenMP sweep");
  app.fallthrough();
  app.add_subcommand("green", "tabulate G_{P_k} and its bound (--k) or a product Green's function (--k0 --sigma --l)")
      ->fallthrough();
  app.add_subcommand("verify", "run the identity and inequality checks")->fallthrough();
  app.add_subcommand("lambda-table", "tabulate the lambda lower bound against -c_{n,k}")->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.grid.spacing = cfg.spacing == "linear" ? sweep::Spacing::linear : sweep::Spacing::geometric;

  Table table;
  try {
    cfg.grid.validate();
    if (cfg.command == "green") table = cmd_green(cfg);
    else if (cfg.command == "verify") table = cmd_verify(cfg);
    else table = cmd_lambda_table(cfg);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const quad::QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    return verification_failed;
  }

  if (cfg.out_path.empty()) {
    emit(cfg, table, out);
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << "\n";
      return usage_error;
    }
    emit(cfg, table, file);
  }
  if (!table.pass) {
    if (cfg.command == "verify")
      for (const auto& r : table.rows)
        if (!r[5].get<bool>()) err << "failed: " << r[1].get<std::string>() << "\n";
    return verification_failed;
  }
  return ok;
}

}  // namespace hypgreen::cli
