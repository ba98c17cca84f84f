#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

const std::string kCli = ADCAP_CLI_PATH;

int run(const std::string& args, const std::string& stdout_path = "/dev/null") {
  const std::string cmd = kCli + " " + args + " > " + stdout_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("sweep: corner values, header and exit codes") {
  const std::string path = "/tmp/adcap_sweep_ce2.csv";
  REQUIRE(run("sweep --quantity ce2 --chi-points 2 --mu-points 2 -o " + path) == 0);
  const auto text = slurp(path);
  const auto rows = parse_csv(text);
  REQUIRE(rows.size() == 5);
  CHECK(text.substr(0, 13) == "chi,mu,value\n");

  // Per-use corners: (0,0)->2, (0,1)->2, (pi/2,0)->0, (pi/2,1)->1.3443609.
  CHECK(std::stod(rows[1][2]) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::stod(rows[2][2]) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::stod(rows[3][2]) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::stod(rows[4][2]) == doctest::Approx(1.3443609).epsilon(1e-7));

  const std::string cp_path = "/tmp/adcap_sweep_cp2.csv";
  REQUIRE(run("sweep --quantity cp2 --chi-points 2 --mu-points 2 -o " + cp_path) == 0);
  const auto cp_rows = parse_csv(slurp(cp_path));
  CHECK(std::stod(cp_rows[1][2]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::stod(cp_rows[2][2]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::stod(cp_rows[3][2]) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::stod(cp_rows[4][2]) == doctest::Approx(0.75).epsilon(1e-9));

  CHECK(run("sweep --no-such-flag") == 2);
  CHECK(run("definitely-not-a-subcommand") == 2);
  CHECK(run("sweep -o /nonexistent-dir/out.csv --chi-points 2 --mu-points 2") == 1);
}

TEST_CASE("sweep output is byte-identical across runs and thread counts") {
  const std::string a = "/tmp/adcap_det_a.csv", b = "/tmp/adcap_det_b.csv",
                    c = "/tmp/adcap_det_c.csv";
  REQUIRE(run("sweep --chi-points 13 --mu-points 9 -o " + a) == 0);
  REQUIRE(run("sweep --chi-points 13 --mu-points 9 -o " + b) == 0);
  REQUIRE(run("sweep --chi-points 13 --mu-points 9 --jobs 4 -o " + c) == 0);
  const auto ta = slurp(a);
  CHECK(ta == slurp(b));
  CHECK(ta == slurp(c));
  CHECK(!ta.empty());
}

TEST_CASE("CSV values round-trip at the printed precision") {
  const std::string path = "/tmp/adcap_roundtrip.csv";
  REQUIRE(run("sweep --chi-points 5 --mu-points 5 -o " + path) == 0);
  const auto rows = parse_csv(slurp(path));
  for (size_t i = 1; i < rows.size(); ++i) {
    const double v = std::stod(rows[i][2]);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    CHECK(rows[i][2] == buf);
  }
}

TEST_CASE("json sweep carries metadata") {
  const std::string path = "/tmp/adcap_sweep.json";
  REQUIRE(run("sweep --format json --chi-points 3 --mu-points 3 --quantity qe2 -o " + path) == 0);
  const auto text = slurp(path);
  CHECK(text.find("\"quantity\": \"qe2\"") != std::string::npos);
  CHECK(text.find("\"per_use\": true") != std::string::npos);
  CHECK(text.find("\"chi_points\": 3") != std::string::npos);
  CHECK(text.find("\"rows\"") != std::string::npos);
}

TEST_CASE("tradeoff table endpoints") {
  const std::string path = "/tmp/adcap_tradeoff.csv";
  REQUIRE(run("tradeoff --chi 0.6666666666666666 --mu 0.5 --budget-points 5 --resolution 32 -o " +
              path) == 0);
  const auto rows = parse_csv(slurp(path));
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"P", "theta1", "theta2", "capacity"});
  CHECK(std::stod(rows[1][1]) == 0.0);
  CHECK(std::stod(rows[1][2]) == 0.0);
  double prev_p = -1.0, prev_cap = -1.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][0]) > prev_p);
    CHECK(std::stod(rows[i][3]) >= prev_cap - 1e-10);
    prev_p = std::stod(rows[i][0]);
    prev_cap = std::stod(rows[i][3]);
  }
}

TEST_CASE("point report") {
  const std::string path = "/tmp/adcap_point.json";
  REQUIRE(run("point --chi 0.5 --mu 0.5", path) == 0);
  const auto text = slurp(path);
  CHECK(text.find("\"ce2\"") != std::string::npos);
  CHECK(text.find("\"omega\"") != std::string::npos);
  CHECK(text.find("\"omega_tilde\"") != std::string::npos);
}

TEST_CASE("verify: fast pass, perturbation self-test, deterministic report") {
  const std::string a = "/tmp/adcap_verify_a.txt", b = "/tmp/adcap_verify_b.txt";
  REQUIRE(run("verify --grid 5 --samples 20 --seed 7", a) == 0);
  REQUIRE(run("verify --grid 5 --samples 20 --seed 7", b) == 0);
  const auto ta = slurp(a);
  CHECK(ta == slurp(b));
  CHECK(ta.find("FAIL") == std::string::npos);
  CHECK(ta.find("PASS") != std::string::npos);

  const std::string p = "/tmp/adcap_verify_perturbed.txt";
  CHECK(run("verify --grid 5 --samples 20 --perturb", p) == 1);
  const auto tp = slurp(p);
  CHECK(tp.find("FAIL") != std::string::npos);
  CHECK(tp.find("output-spectrum") != std::string::npos);
}
