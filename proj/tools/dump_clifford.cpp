#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "otfkm/clifford.hpp"

int main(int argc, char** argv) {
  CLI::App app{"writes the matrices P_0..P_m of a symmetric Clifford system "
               "as plain text"};
  int m = 0;
  int k = 0;
  std::string output;
  app.add_option("--m", m, "Clifford system size")->required();
  app.add_option("--k", k, "representation multiplicity")->required();
  app.add_option("--output", output, "destination file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const otfkm::CliffordSystem sys = otfkm::build_clifford_system(m, k);
    std::ofstream file(output);
    if (!file) {
      std::cerr << "config error: cannot write " << output << "\n";
      return 2;
    }
    otfkm::dump_clifford(sys, file);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
