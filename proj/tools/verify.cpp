#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "otfkm/errors.hpp"
#include "otfkm/suites.hpp"

namespace {

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("pair must look like 3,4");
  std::size_t used = 0;
  const int a = std::stoi(text.substr(0, comma), &used);
  if (used != comma) throw std::invalid_argument("pair must look like 3,4");
  const std::string rest = text.substr(comma + 1);
  const int b = std::stoi(rest, &used);
  if (used != rest.size())
    throw std::invalid_argument("pair must look like 3,4");
  return {a, b};
}

std::pair<std::string, double> parse_tol(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw std::invalid_argument("tolerance override must look like name=1e-8");
  std::size_t used = 0;
  const std::string value = text.substr(eq + 1);
  const double tol = std::stod(value, &used);
  if (used != value.size() || !(tol >= 0.0))
    throw std::invalid_argument("bad tolerance in '" + text + "'");
  return {text.substr(0, eq), tol};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "verifies isoparametric hypersurfaces built from symmetric Clifford "
      "systems: spectra, fiber isomorphisms, almost complex structures and "
      "*-Ricci curvature"};
  app.set_version_flag("--version", otfkm::kToolVersion);
  app.set_config("--config", "",
                 "flat key=value file with # comments; flags win");

  std::string suite = "all";
  std::string pair = "3,4";
  std::string format = "tree";
  std::string output;
  std::vector<std::string> tols;
  otfkm::RunConfig cfg;

  app.add_option("--suite", suite,
                 "clifford | geometry | isomorphisms | nearly-kahler | "
                 "star-ricci | all")
      ->capture_default_str();
  app.add_option("--m", cfg.m, "Clifford system size")->capture_default_str();
  app.add_option("--k", cfg.k, "representation multiplicity")
      ->capture_default_str();
  app.add_option("--pair", pair, "dual multiplicities: 1,2 1,6 2,5 or 3,4")
      ->capture_default_str();
  app.add_option("--theta", cfg.theta, "level parameter in (0, pi/4)")
      ->capture_default_str();
  app.add_option("--samples", cfg.samples, "sample points per check")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "base seed")->capture_default_str();
  app.add_option("--fd-step", cfg.fd_step, "finite difference step")
      ->capture_default_str();
  app.add_option("--tol", tols,
                 "per-check tolerance override name=value, repeatable");
  app.add_option("--output", output, "write the report here, default stdout");
  app.add_option("--format", format, "tree | table")
      ->check(CLI::IsMember({"tree", "table"}))
      ->capture_default_str();
  app.add_option("--workers", cfg.workers,
                 "worker threads; report bytes do not depend on it")
      ->envname("OTFKM_WORKERS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.suite = otfkm::parse_suite(suite);
    std::tie(cfg.pair_m1, cfg.pair_m2) = parse_pair(pair);
    for (const auto& t : tols) cfg.tolerances.insert(parse_tol(t));
    otfkm::validate(cfg);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    const otfkm::Report rep = otfkm::run_suite(cfg);
    const std::string text =
        format == "table" ? otfkm::emit_table(rep) : otfkm::emit_tree(rep);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(output);
      if (!file) {
        std::cerr << "config error: cannot write " << output << "\n";
        return 2;
      }
      file << text;
    }
    return rep.all_passed() ? 0 : 1;
  } catch (const otfkm::NumericalIntegrityError& e) {
    std::cerr << "numerical integrity failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
