#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Binary locations are baked in at configure time; see CMakeLists.txt.
const std::string kVerify = OTFKM_VERIFY_BIN;
const std::string kDump = OTFKM_DUMP_BIN;

int run(const std::string& args) {
  const std::string cmd = args + " >/dev/null 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  REQUIRE(WIFEXITED(raw));
  return WEXITSTATUS(raw);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("identical config and seed reproduce the report byte for byte") {
  const std::string base =
      kVerify + " --suite star-ricci --pair 1,2 --samples 3 --seed 7";
  CHECK(run(base + " --output cli_a.txt") == 0);
  CHECK(run(base + " --output cli_b.txt") == 0);
  const std::string a = slurp("cli_a.txt");
  CHECK(a == slurp("cli_b.txt"));
  CHECK(!a.empty());

  CHECK(run(base + " --workers 3 --output cli_c.txt") == 0);
  CHECK(a == slurp("cli_c.txt"));
}

TEST_CASE("worker count never changes the report") {
  const std::string base =
      kVerify + " --suite nearly-kahler --pair 1,2 --samples 2 --seed 3";
  CHECK(run(base + " --output cli_serial.txt") == 0);
  CHECK(run(base + " --workers 4 --output cli_pool.txt") == 0);
  CHECK(slurp("cli_serial.txt") == slurp("cli_pool.txt"));
}

TEST_CASE("exit codes separate config errors from check failures") {
  CHECK(run(kVerify + " --suite clifford --m 2 --k 2 --samples 5") == 0);
  // theta outside the finite-difference band
  CHECK(run(kVerify + " --suite nearly-kahler --pair 3,4 --theta 0.9") == 2);
  CHECK(run(kVerify + " --suite bogus") == 2);
  CHECK(run(kVerify + " --samples 0") == 2);
  CHECK(run(kVerify + " --pair 2,3") == 2);
  CHECK(run(kVerify + " --no-such-flag") == 2);
  CHECK(run(kVerify + " --suite geometry --m 1 --k 4 --samples 2 --tol "
                      "geometry.spectrum=1e-300") == 1);
}

TEST_CASE("config file supplies defaults and flags override") {
  {
    std::ofstream ini("cli_cfg.ini");
    ini << "# demo configuration\n"
        << "suite=clifford\n"
        << "m=2\n"
        << "k=2\n"
        << "samples=7\n"
        << "seed=9\n";
  }
  CHECK(run(kVerify + " --config cli_cfg.ini --output cli_f1.txt") == 0);
  CHECK(run(kVerify +
            " --suite clifford --m 2 --k 2 --samples 7 --seed 9 "
            "--output cli_f2.txt") == 0);
  CHECK(slurp("cli_f1.txt") == slurp("cli_f2.txt"));

  CHECK(run(kVerify + " --config cli_cfg.ini --m 3 --output cli_f3.txt") == 0);
  CHECK(run(kVerify +
            " --suite clifford --m 3 --k 2 --samples 7 --seed 9 "
            "--output cli_f4.txt") == 0);
  CHECK(slurp("cli_f3.txt") == slurp("cli_f4.txt"));
  CHECK(slurp("cli_f1.txt") != slurp("cli_f3.txt"));
}

TEST_CASE("isomorphisms report compares both Q index ranges") {
  CHECK(run(kVerify +
            " --suite isomorphisms --pair 3,4 --samples 2 --seed 5 "
            "--output cli_iso.txt") == 0);
  const std::string text = slurp("cli_iso.txt");
  CHECK(text.find("iso.q_involution") != std::string::npos);
  CHECK(text.find("iso.q_narrow_floor") != std::string::npos);
  CHECK(text.find("iso.q_narrow_involution_max") != std::string::npos);
}

TEST_CASE("table format emits one row per check") {
  CHECK(run(kVerify +
            " --suite clifford --m 2 --k 2 --samples 5 --format table "
            "--output cli_table.csv") == 0);
  const auto lines = lines_of(slurp("cli_table.csv"));
  REQUIRE(lines.size() > 1);
  CHECK(lines[0] == "name,claim,residual,tolerance,status,points");
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(lines[i].find(",pass,") != std::string::npos);
}

TEST_CASE("dump-clifford writes the documented plain text layout") {
  CHECK(run(kDump + " --m 1 --k 3 --output cli_dump.txt") == 0);
  const auto lines = lines_of(slurp("cli_dump.txt"));
  // header plus (m+1) matrices of 2l rows, m = 1, l = 3
  REQUIRE(lines.size() == 1 + 2 * 6);
  CHECK(lines[0] == "clifford m=1 l=3");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    int fields = 0;
    double value = 0.0;
    while (row >> value) ++fields;
    CHECK(fields == 6);
  }
  // P_0 = diag(I, -I) in the doubled construction
  std::istringstream first(lines[1]);
  double head = 0.0;
  first >> head;
  CHECK(head == 1.0);

  CHECK(run(kDump + " --m 1 --k 1 --output cli_dump_bad.txt") == 2);
  CHECK(run(kDump + " --m 1") == 2);
}
