#include "prudent/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "prudent");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int s = prudent::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {s, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream is(csv);
  std::string l;
  while (std::getline(is, l))
    if (!l.empty() && l[0] != '#') lines.push_back(l);
  return lines;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("enumerate emits a config header and rows") {
    Run r = run({"enumerate", "--k", "3", "--max-area", "10"});
    CHECK(r.status == 0);
    CHECK(r.out.find("# subcommand=enumerate\n") != std::string::npos);
    CHECK(r.out.find("# k=3\n") != std::string::npos);
    CHECK(r.out.find("# digits=40\n") != std::string::npos);
    CHECK(r.out.find("# timestamp=") != std::string::npos);
    auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "n,count");
    CHECK(lines[1] == "1,6");
    CHECK(lines[10] == "10,4962");
  }

  TEST_CASE("reruns are byte-identical without the timestamp") {
    std::vector<std::string> a{"enumerate", "--k", "2", "--max-area", "30", "--no-timestamp"};
    Run r1 = run(a), r2 = run(a);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("timestamp") == std::string::npos);
    CHECK(data_lines(r1.out).back() == "30,1073741826");
  }

  TEST_CASE("global options may follow the subcommand") {
    Run r = run({"enumerate", "--k", "3", "--max-area", "4", "--format", "json", "--no-timestamp"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["subcommand"] == "enumerate");
    CHECK(j["columns"] == nlohmann::json({"n", "count"}));
    CHECK(j["rows"][3][1] == 42);
  }

  TEST_CASE("JSON keeps big integers exact as strings") {
    Run r = run({"--format", "json", "--no-timestamp", "enumerate", "--k", "2", "--max-area", "70"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][69][1] == "1180591620717411303426");
    CHECK(j["rows"][9][1] == 1026);
  }

  TEST_CASE("constants prints name = value lines") {
    Run r = run({"constants", "--digits", "12", "--no-timestamp"});
    CHECK(r.status == 0);
    CHECK(r.out.find("\nkappa0 = 0.1083842946") != std::string::npos);
    CHECK(r.out.find("\npole1 = 0.61803398875") != std::string::npos);
    CHECK(r.out.find("\nU_half = 2.5647911838") != std::string::npos);
    Run c = run({"constants", "--digits", "12", "--format", "csv", "--no-timestamp"});
    CHECK(c.out.find("\nname,value\nkappa0,0.1083842946") != std::string::npos);
  }

  TEST_CASE("PRUDENT_DIGITS sets the default precision") {
    setenv(prudent::cli::kDigitsEnv, "15", 1);
    Run r = run({"constants", "--harmonics", "1", "--no-timestamp"});
    Run o = run({"constants", "--harmonics", "1", "--digits", "20", "--no-timestamp"});
    setenv(prudent::cli::kDigitsEnv, "many", 1);
    Run bad = run({"constants"});
    unsetenv(prudent::cli::kDigitsEnv);
    CHECK(r.out.find("# digits: 15\n") != std::string::npos);
    CHECK(r.out.find("\nkappa0 = 0.108384294660963\n") != std::string::npos);
    CHECK(o.out.find("# digits: 20\n") != std::string::npos);
    CHECK(bad.status == prudent::cli::kUsage);
  }

  TEST_CASE("gf-check reports both values and the difference") {
    Run r = run({"gf-check", "--q", "0.25", "--methods", "taylor,meromorphic", "--digits", "30", "--no-timestamp"});
    REQUIRE(r.status == 0);
    auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "quantity,re,im");
    CHECK(lines[1].rfind("taylor,", 0) == 0);
    CHECK(lines[2].rfind("meromorphic,", 0) == 0);
    CHECK(lines[1].substr(7) == lines[2].substr(12));
  }

  TEST_CASE("verify has a verdict column") {
    Run r = run({"verify", "--k", "3", "--max-area", "5", "--no-timestamp"});
    CHECK(r.status == 0);
    auto lines = data_lines(r.out);
    CHECK(lines[0] == "n,oracle,series,verdict");
    CHECK(lines[5] == "5,92,92,MATCH");
  }

  TEST_CASE("residuals and fit") {
    Run r = run({"residuals", "--max-n", "64", "--terms", "5", "--digits", "20", "--no-timestamp"});
    CHECK(r.status == 0);
    auto lines = data_lines(r.out);
    CHECK(lines[0] == "n,log2n,scaled,residual");
    CHECK(lines.size() == 64);
    CHECK(lines[63].rfind("64,6,", 0) == 0);
    Run f = run({"fit", "--k", "3", "--max-n", "200", "--format", "text", "--no-timestamp"});
    CHECK(f.status == 0);
    CHECK(f.out.find("fitted_exponent = 1.") != std::string::npos);
  }

  TEST_CASE("output file") {
    std::string path = "cli_test_output.csv";
    Run r = run({"enumerate", "--k", "2", "--max-area", "3", "-o", path, "--no-timestamp"});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("3,10\n") != std::string::npos);
    std::remove(path.c_str());
  }

  TEST_CASE("exit codes") {
    using namespace prudent::cli;
    CHECK(run({}).status == kUsage);
    CHECK(run({"enumerate", "--k", "3"}).status == kUsage);
    CHECK(run({"enumerate", "--k", "5", "--max-area", "3"}).status == kUsage);
    CHECK(run({"enumerate", "--k", "2", "--max-area", "3", "--method", "theorem"}).status == kUsage);
    CHECK(run({"--format", "xml", "enumerate", "--k", "2", "--max-area", "3"}).status == kUsage);
    CHECK(run({"oracle", "--k", "4", "--max-area", "11"}).status == kUsage);
    CHECK(run({"gf-check", "--q", "zero", "--methods", "taylor,singular"}).status == kUsage);
    Run d = run({"gf-check", "--q", "0.3", "--methods", "taylor,singular"});
    CHECK(d.status == kDomain);
    CHECK(d.err.find("|1 - 2q| < 0.2") != std::string::npos);
    CHECK(run({"residuals", "--max-n", "10", "--terms", "7"}).status == kUsage);
    CHECK(run({"--help"}).status == kOk);
  }
}
