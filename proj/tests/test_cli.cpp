#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "config.hpp"
#include "warpstab/error.hpp"

using namespace warpstab;
using namespace warpstab::cli;

namespace {

struct Result {
  int code = -1;
  std::string out, err;

  // key=value lines; later keys win
  [[nodiscard]] std::map<std::string, std::string> keys() const {
    std::map<std::string, std::string> m;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
      const auto eq = line.find('=');
      if (eq != std::string::npos && line.find(',') == std::string::npos) m[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return m;
  }
  [[nodiscard]] double number(const std::string& k) const { return std::stod(keys().at(k)); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) { return "warpstab_cli_test_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::vector<double>> csv_rows(const std::string& text, std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("sweep dss(1,0) crosses once at r = 1.5") {
  const auto path = temp_path("dss.csv");
  const auto r = call({"sweep", "--model", "dss", "--m", "1", "--c", "0", "--interval", "1.1", "4", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.keys().at("crossings") == "1");
  CHECK(std::abs(r.number("crossing_1_r") - 1.5) <= 1e-9);
  std::string header;
  const auto rows = csv_rows(slurp(path), &header);
  CHECK(header == "r,H2_slice,H2_required,margin,stable_slice");
  CHECK(rows.size() == 201);
  int changes = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) changes += (rows[i][3] < 0) != (rows[i + 1][3] < 0);
  CHECK(changes == 1);
  std::remove(path.c_str());
}

TEST_CASE("sweep rn(2,0.5) crosses at the closed-form radius") {
  const auto r = call({"sweep", "--model", "rn", "--m", "2", "--q", "0.5", "--interval", "2", "4", "--out",
                       temp_path("rn.csv")});
  REQUIRE(r.code == 0);
  CHECK(r.keys().at("crossings") == "1");
  CHECK(std::abs(r.number("crossing_1_r") - 2.82287565553229529) <= 1e-9);
  std::remove(temp_path("rn.csv").c_str());
}

TEST_CASE("sweep on the round sphere: every slice qualifies") {
  const auto r = call({"sweep", "--model", "space_form", "--c", "1"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(!rows.empty());
  for (const auto& row : rows) {
    CHECK(row[2] == -1.0);
    CHECK(row[3] >= 0.0);
  }
}

TEST_CASE("sweep output is byte-identical across runs") {
  for (const char* what : {"slice", "curvature", "trajectory"}) {
    const std::vector<std::string> args = {"sweep", "--what", what, "--model", "dss", "--m", "1", "--c", "0.05",
                                           "--grid", "57"};
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.size() > 100);
  }
}

TEST_CASE("curvature and trajectory headers") {
  std::string header;
  csv_rows(call({"sweep", "--what", "curvature", "--model", "rn", "--m", "2", "--q", "0.5", "--grid", "4"}).out,
           &header);
  CHECK(header == "t,h,k_tan,k_rad,scal,ric_nu_minus1,brendle_lhs,brendle_rhs");
  const auto tr = call({"sweep", "--what", "trajectory", "--model", "dss", "--m", "1", "--t-max", "1"});
  const auto rows = csv_rows(tr.out, &header);
  CHECK(header == "t,h,hp,hpp,residual");
  CHECK(rows.size() == 1001);
  CHECK(rows.front()[0] == 0.0);
  CHECK(rows.front()[1] == 1.0);  // s0 = m for c = 0
}

TEST_CASE("numbers carry 17 significant digits") {
  const auto r = call({"sweep", "--model", "dss", "--m", "1", "--grid", "3", "--interval", "1.1", "2"});
  const auto rows = csv_rows(r.out);
  // 1.1 is not representable; the printed value must round-trip
  CHECK(rows.front()[0] == 1.1);
  CHECK(r.out.find("1.1000000000000001") != std::string::npos);
}

TEST_CASE("classify examples") {
  const auto e = call({"classify", "--model", "ellipsoid", "--b", "1.5"});
  CHECK(e.code == 0);
  CHECK(e.keys().at("theorem") == "theo-warped-1");
  CHECK(e.keys().at("case") == "window");
  CHECK(e.number("ratio_min") >= 1.0 / 2.25 - 1e-12);
  CHECK(e.number("ratio_max") <= 1.0 + 1e-12);

  const auto h = call({"classify", "--model", "hyperboloid", "--b", "1"});
  CHECK(h.code == 0);
  CHECK(h.keys().at("theorem") == "theo-warped-2");
  CHECK(h.keys().at("case") == "b");
  CHECK(std::abs(h.number("c0") - 1.0) < 1e-9);

  const auto d = call({"classify", "--model", "dss", "--m", "1", "--c", "0"});
  CHECK(d.code == 0);
  CHECK(d.keys().at("slice_path") == "stab-ss");
  CHECK(d.keys().at("ordering_tan_ge_rad") == "true");
  CHECK(d.keys().at("brendle") == "holds");

  // no real embedding with positive K_tan: neither theorem can be stated
  const auto h3 = call({"classify", "--model", "space_form", "--c", "-1"});
  CHECK(h3.code == exit_violated);
  CHECK(h3.keys().at("theorem") == "inapplicable");
}

TEST_CASE("slice verdicts map to exit codes") {
  CHECK(call({"slice", "--model", "dss", "--m", "1", "--r", "3"}).code == exit_ok);
  CHECK(call({"slice", "--model", "dss", "--m", "1", "--r", "1.2"}).code == exit_violated);
  const auto b = call({"slice", "--model", "dss", "--m", "1", "--r", "1.5"});
  CHECK(b.code == exit_boundary);
  CHECK(b.keys().at("hypothesis") == "boundary");
  // an explicit H overrides the slice's own
  CHECK(call({"slice", "--model", "dss", "--m", "1", "--r", "1.2", "--H", "1"}).code == exit_ok);
  // the charge gate 2q <= sqrt(15) m / 4
  const auto g = call({"slice", "--model", "rn", "--m", "2", "--q", "0.99", "--r", "3"});
  CHECK(g.code == exit_violated);
  CHECK(g.keys().at("gate") == "false");
  const auto s = call({"slice", "--model", "dss", "--m", "1", "--r", "2"});
  CHECK(std::abs(s.number("mu_1") - 0.375) < 1e-12);
  CHECK(s.keys().at("verdicts_agree") == "true");
}

TEST_CASE("threshold from (eps, a) and from a model") {
  const auto t = call({"threshold", "--eps", "5", "--a", "1", "--scan"});
  CHECK(t.code == 0);
  CHECK(t.keys().at("window") == "false");
  CHECK(std::abs(t.number("h2_min") - 2.75) < 1e-12);
  CHECK(std::abs(t.number("h2_scan") - 2.75) < 1e-6);
  CHECK(call({"threshold", "--eps", "0.5", "--a", "1"}).keys().at("window") == "true");
  const auto m = call({"threshold", "--model", "dss", "--m", "1"});
  CHECK(m.code == 0);
  CHECK(std::abs(m.number("c0") - 0.5) < 1e-9);
  CHECK(m.keys().at("stab_main_ii") == "n/a");
  CHECK(call({"threshold", "--eps", "5"}).code == exit_parse);
}

TEST_CASE("verify suites pass on built-ins") {
  const auto c = call({"verify", "--suite", "curvature", "--nt", "6", "--nphi", "4"});
  CHECK(c.code == exit_ok);
  CHECK(c.keys().at("models") == "8");
  const auto e = call({"verify", "--suite", "embedding", "--nt", "6"});
  CHECK(e.code == exit_ok);
  CHECK(e.keys().at("pass") == "true");
  const auto i = call({"verify", "--suite", "integrals"});
  CHECK(i.code == exit_ok);
}

TEST_CASE("verification failure exits 4") {
  const auto r = call({"verify", "--suite", "curvature", "--model", "dss", "--m", "1", "--tol", "1e-15", "--nt", "3",
                       "--nphi", "3"});
  CHECK(r.code == exit_verification);
  CHECK(r.keys().at("pass") == "false");
}

TEST_CASE("parse and domain failures") {
  CHECK(call({}).code == exit_parse);
  CHECK(call({"nonsense"}).code == exit_parse);
  CHECK(call({"classify", "--model", "dss"}).code == exit_parse);  // m missing
  CHECK(call({"classify", "--model", "banana"}).code == exit_parse);
  CHECK(call({"sweep", "--model", "dss", "--m", "1", "--tol", "-1"}).code == exit_parse);
  CHECK(call({"sweep", "--model", "dss", "--m", "1", "--interval", "0.5", "2"}).code == exit_domain);
  CHECK(call({"sweep", "--model", "ellipsoid", "--b", "1.5"}).code == exit_domain);  // no slice theorem
  CHECK(call({"embed", "--model", "dss", "--m", "1", "--c", "-0.1"}).code == exit_domain);
  CHECK(call({"verify", "--suite", "embedding", "--model", "space_form", "--c", "-1"}).code == exit_domain);
  CHECK(call({"--help"}).code == exit_ok);
}

TEST_CASE("config files") {
  const auto path = temp_path("cfg.toml");
  {
    std::ofstream f(path);
    f << "[model]\nkind = \"dss\"\nm = 1\nc = 0\n\n[run]\ninterval = [1.1, 4.0]\ngrid = 31\n";
  }
  const auto r = call({"sweep", "--config", path});
  CHECK(r.code == 0);
  CHECK(csv_rows(r.out).size() == 31);
  // flags override the file
  CHECK(csv_rows(call({"sweep", "--config", path, "--grid", "7"}).out).size() == 7);

  const RunConfig cfg = parse_config("[model]\nkind = \"profile\"\nshape = \"ellipsoid\"\nb = 2\n[run]\ntol = 1e-7\n");
  CHECK(cfg.model.kind == "profile");
  CHECK(*cfg.model.b == 2.0);
  CHECK(*cfg.tol == 1e-7);

  auto code_of = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invalid_parameters;
  };
  CHECK(code_of("[model]\nkind = \"dss\"\nmass = 1\n") == ErrorCode::config_parse);
  CHECK(code_of("[model\nkind = 1\n") == ErrorCode::config_parse);
  CHECK(code_of("[run]\ninterval = [1, 2, 3]\n") == ErrorCode::config_parse);
  CHECK(code_of("[run]\ngrid = 2.5\n") == ErrorCode::config_parse);
  {
    std::ofstream f(path);
    f << "[model]\nkind = \"dss\"\nm = 1\n[run]\ntol = 0\n";
  }
  CHECK(call({"sweep", "--config", path}).code == exit_parse);
  CHECK(call({"sweep", "--config", "/nonexistent/warpstab.toml"}).code == exit_parse);
  std::remove(path.c_str());
}

TEST_CASE("embed emits the meridian") {
  const auto r = call({"embed", "--model", "space_form", "--c", "1", "--interval", "0.5", "2", "--grid", "11"});
  CHECK(r.code == 0);
  std::string header;
  const auto rows = csv_rows(r.out, &header);
  CHECK(header == "t,f,h");
  REQUIRE(rows.size() == 11);
  for (const auto& row : rows) CHECK(std::abs(row[1] - (std::cos(0.5) - std::cos(row[0]))) < 1e-12);
}

TEST_CASE("svg output") {
  const auto path = temp_path("plot.svg");
  CHECK(call({"sweep", "--model", "dss", "--m", "1", "--grid", "20", "--svg", path}).code == 0);
  const std::string svg = slurp(path);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::remove(path.c_str());
}
