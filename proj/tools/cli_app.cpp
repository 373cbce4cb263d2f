#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "hpfem/expansion.hpp"
#include "hpfem/io.hpp"
#include "hpfem/pipeline.hpp"

namespace hpfem::cli {
namespace {

struct Options {
  std::vector<double> radii{1.0, 2.0, 3.0};
  std::vector<double> eps;
  std::vector<int> degrees;
  double kappa = 1.0;
  int sectors = 16;
  std::string data_case = "const";
  std::string out_path;
  std::string h_sign = "+";
  double f = 1.0;
  double h = 0.0;
  double rho0 = 0.0;
  double rho_sigma = 0.0;
  std::string solution_path;
  bool json = false;
  int samples = 41;
};

RunConfig make_config(const Options& o, std::vector<double> default_eps, std::vector<int> default_p) {
  if (o.radii.size() != 3) throw std::invalid_argument("--radii expects exactly three values a,b,c");
  RunConfig config;
  config.a = o.radii[0];
  config.b = o.radii[1];
  config.c = o.radii[2];
  config.eps = o.eps.empty() ? std::move(default_eps) : o.eps;
  config.degrees = o.degrees.empty() ? std::move(default_p) : o.degrees;
  config.kappa = o.kappa;
  config.sectors = o.sectors;
  config.data = o.data_case == "manufactured" ? DataCase::manufactured : DataCase::constant;
  config.f_const = o.f;
  config.h_const = o.h;
  config.h_sign = o.h_sign == "-" ? -1.0 : 1.0;
  if (o.rho0 > 0.0) config.rho0 = o.rho0;
  if (o.rho_sigma > 0.0) config.rho_sigma = o.rho_sigma;
  validate(config);
  return config;
}

void require_single(const RunConfig& config, const char* command) {
  if (config.eps.size() != 1 || config.degrees.size() != 1) {
    throw std::invalid_argument(fmt::format("{} takes a single --eps and a single --p value", command));
  }
}

std::string sweep_text(const RunConfig& config, const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  write_csv(os, records);
  std::map<double, std::vector<SweepRecord>> by_eps;
  for (const auto& r : records) by_eps[r.eps].push_back(r);
  for (const auto& [eps, rows] : by_eps) {
    try {
      const RateFit fit = fit_rate(rows);
      os << fmt::format("# fit eps={} b={} C={} r2={} semilog_slope={}\n", format_double(eps), format_double(fit.b),
                        format_double(fit.c), format_double(fit.r_squared), format_double(fit.semilog_slope));
    } catch (const std::invalid_argument& e) {
      os << fmt::format("# fit eps={} unavailable: {}\n", format_double(eps), e.what());
    }
  }
  (void)config;
  return os.str();
}

std::string solve_text(const RunConfig& config, const Options& o) {
  require_single(config, "solve");
  const CaseResult result = solve_case(config, config.eps.front(), config.degrees.front());
  if (!o.solution_path.empty()) {
    std::ofstream file(o.solution_path);
    if (!file) throw std::invalid_argument("cannot open --solution path " + o.solution_path);
    file << solution_json(*result.space, result.coefficients, config.eps.front());
  }
  std::ostringstream os;
  write_csv(os, {result.record});
  return os.str();
}

std::string mesh_text(const RunConfig& config) {
  require_single(config, "mesh");
  const double eps = config.eps.front();
  const int p = config.degrees.front();
  const LayerMesh mesh = build_mesh(config.geometry(), config.mesh_params(p, eps));
  return mesh_json(mesh, p, eps, config.kappa);
}

std::string oracle_text(const RunConfig& config, int samples) {
  if (samples < 2) throw std::invalid_argument("--samples must be at least 2");
  std::string out = "eps,r,u,du_dr\n";
  const AnnularGeometry g = config.geometry();
  for (double eps : config.eps) {
    const RadialExact exact(g, eps, config.f_const, config.h_const, config.h_sign);
    for (int i = 0; i < samples; ++i) {
      const double r = i + 1 == samples ? g.c() : g.a() + (g.c() - g.a()) * i / (samples - 1);
      const RadialValue v = exact.eval(r);
      out += fmt::format("{},{},{},{}\n", format_double(eps), format_double(r), format_double(v.value),
                         format_double(v.derivative));
    }
  }
  return out;
}

std::string expansion_text(const RunConfig& config, int samples) {
  std::string out = "eps,composite_error\n";
  const AnnularGeometry g = config.geometry();
  CompositeOptions options;
  if (config.rho0) options.rho0 = *config.rho0;
  if (config.rho_sigma) options.rho_sigma = *config.rho_sigma;
  for (double eps : config.eps) {
    const CompositeApprox composite(g, eps, config.f_const, config.h_const, config.h_sign, options);
    const RadialExact exact(g, eps, config.f_const, config.h_const, config.h_sign);
    out += fmt::format("{},{}\n", format_double(eps), format_double(composite_error(composite, exact, samples)));
  }
  return out;
}

void add_common(CLI::App& cmd, Options& o) {
  cmd.set_help_flag("--help", "print this help and exit");
  cmd.add_option("--radii", o.radii, "a,b,c with 0 < a < b < c")->delimiter(',')->expected(3);
  cmd.add_option("--eps", o.eps, "comma-separated eps values in (0, 1]")->delimiter(',');
  cmd.add_option("--p", o.degrees, "comma-separated polynomial degrees")->delimiter(',');
  cmd.add_option("--kappa", o.kappa, "needle-width scale");
  cmd.add_option("--sectors", o.sectors, "angular sectors");
  cmd.add_option("--case", o.data_case, "data case")->check(CLI::IsMember({"const", "manufactured"}));
  cmd.add_option("--out", o.out_path, "write output here instead of stdout");
  cmd.add_option("--h-sign", o.h_sign, "sign of the interface load term")->check(CLI::IsMember({"+", "-"}));
  cmd.add_option("--f", o.f, "constant source (const case)");
  cmd.add_option("--h", o.h, "constant interface datum (const case)");
  cmd.add_option("--rho0", o.rho0, "tube depth along r = a");
  cmd.add_option("--rho-sigma", o.rho_sigma, "tube depth along r = b");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hp finite elements for a singularly perturbed transmission problem on an annulus", "hpfem"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Options o;
  auto* solve = app.add_subcommand("solve", "single (eps, p) run: CSV record, optional nodal JSON");
  auto* sweep = app.add_subcommand("sweep", "cross product of eps and p: CSV records plus fit lines");
  auto* mesh = app.add_subcommand("mesh", "mesh JSON for one (eps, p)");
  auto* oracle = app.add_subcommand("oracle", "CSV table of the exact radial solution");
  auto* expansion = app.add_subcommand("expansion", "CSV of the leading-order composite error");
  for (auto* cmd : {solve, sweep, mesh, oracle, expansion}) add_common(*cmd, o);
  solve->add_option("--solution", o.solution_path, "nodal solution JSON path");
  sweep->add_flag("--json", o.json, "emit JSON records instead of CSV");
  oracle->add_option("--samples", o.samples, "points per eps");
  expansion->add_option("--samples", o.samples, "uniform sample count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_config;
  }

  try {
    std::string text;
    if (solve->parsed()) {
      text = solve_text(make_config(o, {1e-2}, {8}), o);
    } else if (sweep->parsed()) {
      const RunConfig config = make_config(o, {1e-2}, {1, 2, 3, 4, 5, 6, 7, 8});
      const auto records = run_sweep(config);
      text = o.json ? records_json(records) : sweep_text(config, records);
    } else if (mesh->parsed()) {
      text = mesh_text(make_config(o, {1e-2}, {8}));
    } else if (oracle->parsed()) {
      text = oracle_text(make_config(o, {1e-2}, {1}), o.samples);
    } else {
      if (o.data_case == "manufactured") throw std::invalid_argument("expansion supports --case const only");
      text = expansion_text(make_config(o, {1e-1, 1e-2, 1e-3, 1e-4}, {1}), o.samples);
    }
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path);
      if (!file) throw std::invalid_argument("cannot open --out path " + o.out_path);
      file << text;
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::out_of_range& e) {
    err << "configuration error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  }
  return exit_ok;
}

}  // namespace hpfem::cli
