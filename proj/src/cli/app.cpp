#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hua/cli.hpp"
#include "hua/errors.hpp"

namespace hua::cli {
namespace {

struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

struct Command {
  const char* name;
  const char* help;
  std::vector<Flag> flags;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"eval-2f1", "Evaluate the Jack-series 2F1(a, b; c; x)",
       {{"--a", "a", "numerator parameter"},
        {"--b", "b", "numerator parameter"},
        {"--c", "c", "denominator parameter"},
        {"--m", "m", "root multiplicity (alpha = 2/m)"},
        {"--x", "x", "comma-separated arguments, |x_i| < 1"},
        {"--reference", "reference", "none|classical|binomial|euler"},
        {"--check-tol", "check_tol", "relative tolerance against the reference"}}},
      {"eval-spherical", "Evaluate the spherical function in both series forms",
       {{"--lambda", "lambda", "spectral parameter"},
        {"--nu", "nu", "line bundle twist"},
        {"--r", "r", "rank (defaults to the number of coordinates)"},
        {"--m", "m", "root multiplicity"},
        {"--t", "t", "comma-separated flat coordinates"},
        {"--check-tol", "check_tol", "relative tolerance between the two forms"}}},
      {"check-hua-integral", "Shilov-boundary integral of the Poisson kernel vs closed form",
       {{"--domain", "domain", "disk|typeI"},
        {"--n", "n", "matrix size for typeI"},
        {"--lambda", "lambda", "spectral parameter"},
        {"--nu", "nu", "line bundle twist"},
        {"--t", "t", "comma-separated flat coordinates"},
        {"--nodes", "nodes", "quadrature nodes for the disk"},
        {"--check-tol", "check_tol", "absolute tolerance for the disk"}}},
      {"check-schur-det", "Schur-weighted integral vs the determinant formula",
       {{"--n", "n", "matrix size"},
        {"--sig", "sig", "comma-separated signature m_1 >= ... >= m_n"},
        {"--lambda", "lambda", "spectral parameter"},
        {"--t", "t", "z = tanh(t) I"},
        {"--measure", "measure", "haar|weyl_torus"},
        {"--variant", "variant", "both|abs_h|abs_h_squared"}}},
      {"check-pde", "Finite-difference residual of the radial system",
       {{"--lambda", "lambda", "spectral parameter"},
        {"--nu", "nu", "line bundle twist"},
        {"--r", "r", "rank (defaults to the number of coordinates)"},
        {"--m", "m", "root multiplicity"},
        {"--t", "t", "comma-separated flat coordinates"},
        {"--constant", "constant", "consistent|printed"},
        {"--check-tol", "check_tol", "relative residual tolerance"},
        {"--ratio-min", "ratio_min", "lower Richardson bound"},
        {"--ratio-max", "ratio_max", "upper Richardson bound"}}},
      {"check-x-system", "Finite-difference residual of the x-coordinate system (not gated)",
       {{"--lambda", "lambda", "spectral parameter"},
        {"--nu", "nu", "line bundle twist"},
        {"--r", "r", "rank (defaults to the number of coordinates)"},
        {"--m", "m", "root multiplicity"},
        {"--x", "x", "comma-separated negative coordinates"},
        {"--check-tol", "check_tol", "relative residual tolerance"}}},
      {"check-casimir-disk", "Casimir eigen-equation of the disk Poisson integral",
       {{"--lambda", "lambda", "spectral parameter"},
        {"--z", "z", "point of the disk, 0.3+0.1i or 0.3,0.1"},
        {"--nodes", "nodes", "quadrature nodes"},
        {"--check-tol", "check_tol", "relative residual tolerance"}}},
      {"check-covariance", "Kernel covariance and cocycle identity on random draws",
       {{"--n", "n", "matrix size"},
        {"--lambda", "lambda", "spectral parameter"},
        {"--nu", "nu", "line bundle twist"},
        {"--draws", "draws", "number of random (g, z, u)"},
        {"--z-norm", "z_norm", "largest spectral norm of z"},
        {"--g-scale", "g_scale", "norm of the Lie algebra element"},
        {"--check-tol", "check_tol", "relative tolerance for the kernel"},
        {"--cocycle-tol", "cocycle_tol", "relative tolerance for the cocycle"}}},
      {"table", "Domain invariants and eigenvalues",
       {{"--domain", "domain", "disk|typeI|typeII|typeIII|typeIV|e7"},
        {"--n", "n", "size parameter"},
        {"--lambda", "lambda", "spectral parameter (optional)"},
        {"--nu", "nu", "line bundle twist"}}},
  };
  return list;
}

const std::vector<Flag>& global_flags() {
  static const std::vector<Flag> list = {
      {"--seed", "seed", "RNG seed (u64)"},
      {"--samples", "samples", "Monte Carlo sample count"},
      {"--kmax", "kmax", "series truncation degree"},
      {"--tol", "tol", "series shell tolerance"},
      {"--fd-step", "h", "finite-difference step"},
      {"--workers", "workers", "MC worker threads (0 = all cores)"},
  };
  return list;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::invalid_argument, "cannot parse '" + path + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification tool for Hua-type integrals, spherical functions and radial systems"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& f : global_flags()) options[f.key] = app.add_option(f.name, values[f.key], f.help);
  std::string output = "json";
  std::string out_path;
  app.add_option("--output", output, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  std::map<std::string, std::map<std::string, std::string>> sub_values;
  std::map<std::string, std::map<std::string, CLI::Option*>> sub_options;
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands()) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    for (const auto& f : c.flags) {
      sub_options[c.name][f.key] = sub->add_option(f.name, sub_values[c.name][f.key], f.help);
    }
    subs[c.name] = sub;
  }
  std::string suite_path;
  auto* suite = app.add_subcommand("suite", "Run every experiment listed in a JSON config file");
  suite->fallthrough();
  suite->add_option("--config", suite_path, "suite config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    const auto format = parse_output_format(output);
    Json defaults = Json::object();
    for (const auto& f : global_flags()) {
      if (options[f.key]->count() > 0) defaults[f.key] = values[f.key];
    }

    Json report;
    if (suite->parsed()) {
      report = run_suite(read_json_file(suite_path), defaults);
    } else {
      for (const auto& c : commands()) {
        if (!subs[c.name]->parsed()) continue;
        Json config = defaults;
        config["command"] = c.name;
        for (const auto& f : c.flags) {
          if (sub_options[c.name][f.key]->count() > 0) config[f.key] = sub_values[c.name][f.key];
        }
        report = run_command(config);
      }
    }

    const std::string text = render(report, format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw Error(Errc::invalid_argument, "cannot write '" + out_path + "'");
      out << text;
    }
    return exit_code(report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::numerical ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace hua::cli
