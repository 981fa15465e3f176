#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HSTRACE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path golden(const char* name) { return fs::path(HSTRACE_GOLDEN_DIR) / name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("verdict reports match the goldens byte for byte") {
  RunResult a = run_cli("verdict --group " + q(golden("z5.json")) +
                        " --dim 4 --homotopy-finite");
  CHECK(a.exit_code == 0);
  CHECK(a.out == slurp(golden("verdict_z5_d4_hf.json")));

  RunResult b = run_cli("verdict --group " + q(golden("z3.json")) + " --dim 4 --rtilde " +
                        q(golden("rtilde_z3_x.json")));
  CHECK(b.exit_code == 0);
  CHECK(b.out == slurp(golden("verdict_z3_rtilde.json")));

  RunResult c = run_cli("verdict --group " + q(golden("z2.json")) +
                        " --dim 5 --homotopy-finite");
  CHECK(c.exit_code == 0);
  CHECK(c.out == slurp(golden("verdict_z2_d5_hf.json")));
}

TEST_CASE("qgroup golden") {
  RunResult r = run_cli("qgroup --group " + q(golden("z4.json")) + " --dim 5 --reduced");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden("qgroup_z4_d5_reduced.json")));
}

TEST_CASE("classes text golden") {
  RunResult r = run_cli("classes --group " + q(golden("s3_perm.json")) + " --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden("classes_s3.txt")));
}

TEST_CASE("trace with an embedded group") {
  RunResult r = run_cli("trace --matrix " + q(golden("matrix_z3_proj.json")));
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden("trace_z3_proj.json")));
  // with the group passed separately the report is identical
  RunResult r2 = run_cli("trace --group " + q(golden("z3.json")) + " --matrix " +
                         q(golden("matrix_z3_proj.json")));
  CHECK(r2.out == r.out);
}

TEST_CASE("survey golden and empty catalog") {
  RunResult r = run_cli("survey --catalog " + q(golden("catalog_mini")) + " --dims 4,5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden("survey_mini.json")));

  // identical output regardless of the worker pool size
  RunResult r1 = run_cli("survey --catalog " + q(golden("catalog_mini")) +
                         " --dims 4,5 --jobs 1");
  CHECK(r1.out == r.out);

  fs::path empty = fs::temp_directory_path() / "hstrace_empty_catalog";
  fs::create_directories(empty);
  RunResult e = run_cli("survey --catalog " + q(empty) + " --dims 4");
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("\"rows\": []") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string args =
      "verdict --group " + q(golden("z5.json")) + " --dim 4 --homotopy-finite";
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("exit code 2 on parse and validation errors") {
  fs::path bad = fs::temp_directory_path() / "hstrace_bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run_cli("classes --group " + q(bad)).exit_code == 2);
  CHECK(run_cli("classes --group /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("classes --no-such-flag").exit_code == 2);
  CHECK(run_cli("qgroup --group " + q(golden("z4.json")) + " --dim 4 --format yaml")
            .exit_code == 2);
}

TEST_CASE("exit code 3 on mathematical precondition failures") {
  RunResult r = run_cli("verdict --group " + q(golden("z2.json")) +
                        " --dim 4 --complex " + q(golden("complex_nonidem.json")));
  CHECK(r.exit_code == 3);
}

TEST_CASE("verdict accepts a complex over an infinite group") {
  RunResult r = run_cli("verdict --group " + q(golden("complex_s1_group.json")) +
                        " --dim 4 --homotopy-finite --complex " +
                        q(golden("complex_s1.json")));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"outcome\": \"EMBEDDING_EXISTS\"") != std::string::npos);
  CHECK(r.out.find("\"reduced_characteristic_source\": \"complex\"") != std::string::npos);
}

TEST_CASE("--out writes the same bytes to a file") {
  fs::path out = fs::temp_directory_path() / "hstrace_out.json";
  RunResult direct = run_cli("qgroup --group " + q(golden("z4.json")) + " --dim 5");
  RunResult filed = run_cli("qgroup --group " + q(golden("z4.json")) + " --dim 5 --out " +
                            q(out));
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(out) == direct.out);
}
