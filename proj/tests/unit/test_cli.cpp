#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "wr/cli.hpp"
#include "wr/error.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content = "") {
  const auto dir = fs::temp_directory_path() / "wr_cli_test";
  fs::create_directories(dir);
  const auto path = dir / name;
  if (!content.empty()) std::ofstream(path) << content;
  return path;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("partition") {
  auto r = run({"partition", "--builtin", "complete:4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1+8λ+12λ²+8λ³+2λ⁴") != std::string::npos);
  CHECK(r.out.find("hom=31") != std::string::npos);

  r = run({"partition", "--builtin", "cycle:4", "--lambda", "1"});
  CHECK(r.out.find("P=35") != std::string::npos);

  const auto file = temp_file("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  r = run({"partition", "--file", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("coefficients: 1,8,16,8,2") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 1") {
  const auto bad = temp_file("bad.txt", "3 2\n0 1\n1 x\n");
  auto r = run({"partition", "--file", bad.string()});
  CHECK(r.code == wr::cli::kUsageError);
  CHECK(r.err.find("line 3") != std::string::npos);

  CHECK(run({}).code == wr::cli::kUsageError);
  CHECK(run({"frobnicate"}).code == wr::cli::kUsageError);
  CHECK(run({"partition"}).code == wr::cli::kUsageError);
  CHECK(run({"partition", "--builtin", "wheel:4"}).code == wr::cli::kUsageError);
  CHECK(run({"occupancy", "--builtin", "cycle:5", "--lambda", "0"}).code == wr::cli::kUsageError);
  CHECK(run({"occupancy", "--builtin", "cycle:5", "--lambda", "1/x"}).code == wr::cli::kUsageError);
  CHECK(run({"scan", "--catalog", "d2", "--grid", "1;2"}).code == wr::cli::kUsageError);
  CHECK(run({"partition", "--file", "/nonexistent/graph.txt"}).code == wr::cli::kUsageError);
}

TEST_CASE("capacity errors exit 2") {
  CHECK(run({"partition", "--builtin", "cycle:25"}).code == wr::cli::kCapacityError);
  CHECK(run({"lp", "--d", "7", "--lambda", "1"}).code == wr::cli::kCapacityError);
  CHECK(run({"configs", "--d", "7"}).code == wr::cli::kCapacityError);
}

TEST_CASE("occupancy") {
  auto r = run({"occupancy", "--builtin", "cycle:5", "--lambda", "1"});
  CHECK(r.out.find("alpha=42/83") != std::string::npos);
  CHECK(r.out.find("alpha_K=8/15") != std::string::npos);
  r = run({"occupancy", "--builtin", "complete:2", "--lambda1", "1", "--lambda2", "2"});
  CHECK(r.out.find("alpha1=1/6 alpha2=1/2 weighted=5/18") != std::string::npos);
}

TEST_CASE("lp and dualcert") {
  auto r = run({"lp", "--d", "2", "--lambda", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("optimum 8/15, support: K2-full-lists") != std::string::npos);
  CHECK(r.out.find("tight set") != std::string::npos);

  const auto csv = temp_file("dual.csv");
  r = run({"dualcert", "--d", "2", "--lambda", "1", "--csv", csv.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("Λ_p=8/15 Λ_c=1/5 violations=0") != std::string::npos);
  const auto text = slurp(csv);
  CHECK(text.rfind("key,label,a1,a2,alpha_v,alpha_u,slack,tight\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 21);
}

TEST_CASE("verify") {
  const auto csv = temp_file("verify.csv");
  auto r = run({"verify", "--catalog", "d3", "--lambda", "1", "--csv", csv.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("petersen") != std::string::npos);
  CHECK(r.out.find("mismatches=0") != std::string::npos);
  CHECK(slurp(csv).rfind("graph,n,d,lambda1,lambda2,check,lhs,rhs,relation,equality_expected\n", 0) == 0);
  r = run({"verify", "--catalog", "d2", "--lambda", "1/2", "--lambda", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("λ=3") != std::string::npos);
}

TEST_CASE("configs and scan") {
  auto r = run({"configs", "--d", "1", "--lambda", "1"});
  CHECK(r.out.find("configurations=4") != std::string::npos);
  CHECK(r.out.find("K1-full-lists") != std::string::npos);
  r = run({"configs", "--d", "2", "--serialize"});
  CHECK(r.out.find("lists: 12 12") != std::string::npos);

  const auto csv = temp_file("scan.csv");
  r = run({"scan", "--catalog", "d2", "--grid", "2,1;1,1/2", "--csv", csv.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations=0") != std::string::npos);
  CHECK(slurp(csv).find("partition2") != std::string::npos);
}

TEST_CASE("sample is byte-identical for a fixed seed") {
  const std::vector<std::string> args = {"sample", "--builtin", "cycle:5", "--lambda", "1", "--seed", "4", "--samples", "20000"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("rng=mt19937_64") != std::string::npos);
  const auto csv = temp_file("series.csv");
  auto with_csv = args;
  with_csv.insert(with_csv.end(), {"--csv", csv.string()});
  CHECK(run(with_csv).code == 0);
  const auto text = slurp(csv);
  CHECK(text.rfind("step,coloured_fraction\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 20001);
}

TEST_CASE("error classes map to exit codes") {
  CHECK(wr::cli::exit_code_for(wr::CapacityError("x")) == 2);
  CHECK(wr::cli::exit_code_for(wr::VerificationError("x")) == 3);
  CHECK(wr::cli::exit_code_for(wr::ParseError("x", 3)) == 1);
  CHECK(wr::cli::exit_code_for(wr::DomainError("x")) == 1);
  CHECK(wr::cli::exit_code_for(wr::RetryExhaustedError("x")) == 1);
  CHECK(wr::cli::kCounterexample == 4);
}

TEST_CASE("grid splitting") {
  const auto g = wr::cli::split_grid("1,1;2,1;10,1;1,1/2");
  REQUIRE(g.size() == 4);
  CHECK(g[3].second == "1/2");
  CHECK_THROWS_AS(wr::cli::split_grid("1,2,3"), wr::ParseError);
  CHECK_THROWS_AS(wr::cli::split_grid(""), wr::ParseError);
}

TEST_CASE("installed binary reports exit codes") {
  auto status = [](const std::string& args) {
    const int raw = std::system((std::string(WRTOOL_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("partition --builtin complete:3") == 0);
  CHECK(status("partition") == 1);
  CHECK(status("partition --builtin complete:30") == 2);
  CHECK(status("dualcert --d 3 --lambda 2") == 0);
}
