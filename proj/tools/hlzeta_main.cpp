// Command-line front end: single-point evaluation, CSV batches, the
// cross-representation verification suite, and a formatted value table.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlzeta/core.hpp"
#include "hlzeta/driver.hpp"
#include "hlzeta/io.hpp"
#include "hlzeta/verify.hpp"

namespace {

using hlzeta::Complex;
using nlohmann::json;

constexpr int kExitDomain = 2;
constexpr int kExitNoConvergence = 3;

json complex_json(Complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

json result_json(const hlzeta::EvalOutcome& out) {
  return json{
      {"value", complex_json(out.result.value)},
      {"abs_err", out.result.abs_err_estimate},
      {"method", hlzeta::to_string(out.result.method)},
      {"work", out.result.work},
      {"converged", out.result.converged},
      {"reduction_tag", hlzeta::to_string(out.tag)},
  };
}

json error_json(const char* type, const std::string& message) {
  return json{{"error", json{{"type", type}, {"message", message}}}};
}

struct Flags {
  std::string mu = "1", eta = "1", eta_p = "1", delta = "1", delta_p = "1";
  std::string nu = "1", xi = "1", xi_p = "1";
  std::string z = "0", t = "0", s = "1", a = "1";
  std::string method = "auto";
  double tol = 0.0;  // 0 keeps the per-method defaults
  int jobs = 1;
};

void add_point_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--mu", f.mu, "parameter mu");
  cmd->add_option("--eta", f.eta, "parameter eta");
  cmd->add_option("--eta-p", f.eta_p, "parameter eta'");
  cmd->add_option("--delta", f.delta, "parameter delta");
  cmd->add_option("--delta-p", f.delta_p, "parameter delta'");
  cmd->add_option("--nu", f.nu, "parameter nu");
  cmd->add_option("--xi", f.xi, "parameter xi");
  cmd->add_option("--xi-p", f.xi_p, "parameter xi'");
  cmd->add_option("--z", f.z, "argument z");
  cmd->add_option("--t", f.t, "argument t");
  cmd->add_option("--s", f.s, "exponent s");
  cmd->add_option("--a", f.a, "shift a");
}

Complex parse_or_throw(const std::string& text, const char* what) {
  const auto v = hlzeta::parse_complex(text);
  if (!v) {
    throw hlzeta::DomainError(std::string("bad complex literal for ") + what +
                              ": " + text);
  }
  return *v;
}

hlzeta::ParameterSet params_from(const Flags& f) {
  hlzeta::ParameterSet p;
  p.mu = parse_or_throw(f.mu, "--mu");
  p.eta = parse_or_throw(f.eta, "--eta");
  p.eta_p = parse_or_throw(f.eta_p, "--eta-p");
  p.delta = parse_or_throw(f.delta, "--delta");
  p.delta_p = parse_or_throw(f.delta_p, "--delta-p");
  p.nu = parse_or_throw(f.nu, "--nu");
  p.xi = parse_or_throw(f.xi, "--xi");
  p.xi_p = parse_or_throw(f.xi_p, "--xi-p");
  return p;
}

hlzeta::EvalPoint point_from(const Flags& f) {
  hlzeta::EvalPoint pt;
  pt.z = parse_or_throw(f.z, "--z");
  pt.t = parse_or_throw(f.t, "--t");
  pt.s = parse_or_throw(f.s, "--s");
  pt.a = parse_or_throw(f.a, "--a");
  return pt;
}

int env_max_diagonal() {
  const char* env = std::getenv("HLZETA_MAX_DIAGONAL");
  if (env == nullptr || *env == '\0') return 0;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<int>(v) : 0;
}

void apply_configs(const Flags& f, hlzeta::SeriesConfig& scfg,
                   hlzeta::QuadConfig& qcfg) {
  if (f.tol > 0.0) {
    scfg.tol = f.tol;
    qcfg.tol = f.tol;
  }
  if (const int cap = env_max_diagonal(); cap > 0) scfg.max_diagonal = cap;
}

int run_eval(const Flags& f) {
  hlzeta::SeriesConfig scfg;
  hlzeta::QuadConfig qcfg;
  apply_configs(f, scfg, qcfg);
  hlzeta::MethodChoice choice;
  if (!hlzeta::parse_method_choice(f.method, choice)) {
    std::cout << error_json("usage", "unknown method: " + f.method).dump()
              << "\n";
    return kExitDomain;
  }
  try {
    const auto out =
        hlzeta::evaluate(params_from(f), point_from(f), choice, scfg, qcfg);
    std::cout << result_json(out).dump() << "\n";
    return out.result.converged ? 0 : kExitNoConvergence;
  } catch (const hlzeta::DomainError& e) {
    std::cout << error_json("domain", e.what()).dump() << "\n";
    return kExitDomain;
  }
}

struct RowOutcome {
  bool ok = false;
  hlzeta::EvalOutcome eval;
  std::string error;
};

int run_batch(const std::string& path, const Flags& f, bool csv_output) {
  std::ifstream in(path);
  if (!in) {
    std::cout << error_json("io", "cannot open input file: " + path).dump()
              << "\n";
    return kExitDomain;
  }
  std::string line;
  if (!std::getline(in, line)) {
    std::cout << error_json("io", "missing header line").dump() << "\n";
    return kExitDomain;
  }
  hlzeta::BatchLayout layout;
  try {
    layout = hlzeta::parse_batch_header(line);
  } catch (const hlzeta::DomainError& e) {
    std::cout << error_json("io", e.what()).dump() << "\n";
    return kExitDomain;
  }

  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }

  hlzeta::SeriesConfig base_scfg;
  hlzeta::QuadConfig base_qcfg;
  apply_configs(f, base_scfg, base_qcfg);

  std::vector<RowOutcome> results(lines.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= lines.size()) break;
      RowOutcome& r = results[i];
      try {
        const hlzeta::BatchRow row = hlzeta::parse_batch_row(layout, lines[i]);
        hlzeta::SeriesConfig scfg = base_scfg;
        hlzeta::QuadConfig qcfg = base_qcfg;
        if (row.tol) {
          scfg.tol = *row.tol;
          qcfg.tol = *row.tol;
        }
        const auto choice = row.method.value_or(hlzeta::MethodChoice::Auto);
        r.eval = hlzeta::evaluate(row.params, row.point, choice, scfg, qcfg);
        r.ok = true;
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  };
  const int jobs = std::max(1, f.jobs);
  if (jobs == 1 || lines.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (csv_output) {
    std::cout << "row,value_re,value_im,abs_err,method,work,converged,"
                 "reduction_tag,error\n";
  }
  for (size_t i = 0; i < results.size(); ++i) {
    const RowOutcome& r = results[i];
    if (csv_output) {
      if (r.ok) {
        const auto& e = r.eval.result;
        std::printf("%zu,%s,%s,%s,%s,%lld,%s,%s,\n", i,
                    hlzeta::format_double(e.value.real()).c_str(),
                    hlzeta::format_double(e.value.imag()).c_str(),
                    hlzeta::format_double(e.abs_err_estimate).c_str(),
                    hlzeta::to_string(e.method), e.work,
                    e.converged ? "true" : "false",
                    hlzeta::to_string(r.eval.tag));
      } else {
        std::printf("%zu,,,,,,,,\"%s\"\n", i, r.error.c_str());
      }
      continue;
    }
    json j;
    if (r.ok) {
      j = result_json(r.eval);
      j["row"] = i;
    } else {
      j = json{{"row", i}, {"error", r.error}};
    }
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_verify(bool full, std::uint64_t seed, double tol, int jobs) {
  hlzeta::VerifyOptions opts;
  opts.full_grid = full;
  opts.seed = seed;
  opts.tol_override = tol;
  opts.jobs = jobs;
  const hlzeta::VerifySummary summary = hlzeta::run_verify_suite(opts);
  for (const hlzeta::IdentityReport& r : summary.reports) {
    const json j{
        {"id", r.id},
        {"point", r.point},
        {"lhs", complex_json(r.lhs)},
        {"rhs", complex_json(r.rhs)},
        {"abs_diff", r.abs_diff},
        {"tolerance", r.tolerance},
        {"pass", r.pass},
        {"converged", r.converged},
    };
    std::cout << j.dump() << "\n";
  }
  if (!summary.all_pass) return 1;
  if (!summary.all_converged) return kExitNoConvergence;
  return 0;
}

int run_table(const Flags& f, double z_min, double z_max, int z_steps,
              double t_min, double t_max, int t_steps) {
  hlzeta::SeriesConfig scfg;
  hlzeta::QuadConfig qcfg;
  apply_configs(f, scfg, qcfg);
  hlzeta::ParameterSet p;
  hlzeta::EvalPoint base;
  try {
    p = params_from(f);
    base = point_from(f);
  } catch (const hlzeta::DomainError& e) {
    std::cout << error_json("domain", e.what()).dump() << "\n";
    return kExitDomain;
  }
  if (z_steps < 1 || t_steps < 1) {
    std::cout << error_json("usage", "steps must be >= 1").dump() << "\n";
    return kExitDomain;
  }
  std::printf("%12s", "z \\ t");
  for (int j = 0; j < t_steps; ++j) {
    const double t = t_min + (t_max - t_min) * (t_steps == 1 ? 0.0 : j / double(t_steps - 1));
    std::printf(" %14.6g", t);
  }
  std::printf("\n");
  for (int i = 0; i < z_steps; ++i) {
    const double z = z_min + (z_max - z_min) * (z_steps == 1 ? 0.0 : i / double(z_steps - 1));
    std::printf("%12.6g", z);
    for (int j = 0; j < t_steps; ++j) {
      const double t = t_min + (t_max - t_min) * (t_steps == 1 ? 0.0 : j / double(t_steps - 1));
      hlzeta::EvalPoint pt = base;
      pt.z = z;
      pt.t = t;
      try {
        const auto out =
            hlzeta::evaluate(p, pt, hlzeta::MethodChoice::Auto, scfg, qcfg);
        std::printf(" %14.10f", out.result.value.real());
      } catch (const hlzeta::DomainError&) {
        std::printf(" %14s", "-");
      }
    }
    std::printf("\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-variable Hurwitz-Lerch zeta family evaluator"};
  app.require_subcommand(1);

  Flags ef;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one point, JSON output");
  add_point_options(eval, ef);
  eval->add_option("--method", ef.method,
                   "auto|series|diagonal|quad-m4|quad-beta|closed-kernel");
  eval->add_option("--tol", ef.tol, "absolute tolerance");

  Flags bf;
  std::string batch_path;
  bool batch_csv = false;
  CLI::App* batch =
      app.add_subcommand("batch", "evaluate a CSV of points, one record per row");
  batch->add_option("input", batch_path, "input CSV path")->required();
  batch->add_option("--tol", bf.tol, "absolute tolerance applied to all rows");
  batch->add_option("--jobs", bf.jobs, "parallel evaluations");
  batch->add_flag("--csv", batch_csv, "CSV output instead of JSON lines");

  CLI::App* verify =
      app.add_subcommand("verify", "run the identity suite, JSON-lines report");
  std::string grid = "small";
  std::uint64_t seed = 0;
  double vtol = 0.0;
  int vjobs = 1;
  verify->add_option("--grid", grid, "small|full")
      ->check(CLI::IsMember({"small", "full"}));
  verify->add_option("--seed", seed, "sampler seed");
  verify->add_option("--tol", vtol, "override every identity tolerance");
  verify->add_option("--jobs", vjobs, "parallel evaluations");

  Flags tf;
  double z_min = 0.0, z_max = 0.8, t_min = 0.0, t_max = 0.8;
  int z_steps = 5, t_steps = 5;
  CLI::App* table = app.add_subcommand("table", "print a value grid over z and t");
  add_point_options(table, tf);
  table->add_option("--tol", tf.tol, "absolute tolerance");
  table->add_option("--z-min", z_min);
  table->add_option("--z-max", z_max);
  table->add_option("--z-steps", z_steps);
  table->add_option("--t-min", t_min);
  table->add_option("--t-max", t_max);
  table->add_option("--t-steps", t_steps);

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) return run_eval(ef);
  if (batch->parsed()) return run_batch(batch_path, bf, batch_csv);
  if (verify->parsed()) return run_verify(grid == "full", seed, vtol, vjobs);
  if (table->parsed()) return run_table(tf, z_min, z_max, z_steps, t_min, t_max, t_steps);
  return 0;
}
