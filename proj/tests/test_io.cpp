#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <hstrace/format.hpp>
#include <hstrace/io.hpp>
#include <hstrace/qcalc.hpp>

#include "test_util.hpp"

using namespace hstrace;
using namespace testutil;

namespace {

std::filesystem::path golden_dir() { return HSTRACE_GOLDEN_DIR; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("group descriptors parse for every backend") {
  GroupPtr t = parse_group(R"({"kind":"table","size":2,"mul":[[0,1],[1,0]]})");
  CHECK(t->order() == 2);

  GroupPtr p = parse_group(
      R"({"kind":"perm","name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]]})");
  CHECK(p->order() == 6);
  CHECK(p->name() == "S3");

  GroupPtr a = parse_group(
      R"({"kind":"fgabelian","free_rank":1,"invariant_factors":[2,3]})");
  CHECK_FALSE(a->is_finite());
  CHECK(a->invariant_factors() == std::vector<Int>{Int(6)});
}

TEST_CASE("descriptor errors carry the offending location") {
  CHECK_THROWS_WITH_AS(parse_group(R"({"kind":"nope"})"), doctest::Contains("unknown kind"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_group(R"({"kind":"table","size":2,"mul":[[0,1],[1,3]]})"),
                       doctest::Contains("mul[1][1]"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_group(R"({"kind":"perm","degree":3,"generators":[[1,1,0]]})"),
      doctest::Contains("generator 0"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_group("not json"), doctest::Contains("invalid JSON"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_group(R"({"kind":"fgabelian","free_rank":0,"invariant_factors":[1]})"),
      doctest::Contains("invariant_factors[0]"), ValidationError);
}

TEST_CASE("matrix files embed or reference their group") {
  const std::string text = slurp(golden_dir() / "matrix_z3_proj.json");
  GroupRingMatrix m = parse_matrix(text);
  CHECK(m.size() == 2);
  CHECK(m.is_idempotent());
  ClassVector t = hs_trace(m);
  CHECK(t.coefficient(m.group()->identity()) == 1);

  // a matching fallback group wins so downstream values share the instance
  GroupPtr z3 = z_mod(3);
  GroupRingMatrix m2 = parse_matrix(text, z3);
  CHECK(m2.group() == z3);

  // a mismatched fallback is rejected
  CHECK_THROWS_WITH_AS(parse_matrix(text, z_mod(4)),
                       doctest::Contains("differs from the supplied group"),
                       ValidationError);

  // "ref" requires a fallback
  CHECK_THROWS_AS(parse_matrix(R"({"group":"ref","n":1,"entries":[[[]]]})"),
                  ValidationError);
}

TEST_CASE("matrix term errors name the entry") {
  GroupPtr z3 = z_mod(3);
  CHECK_THROWS_WITH_AS(parse_matrix(R"({"n":1,"entries":[[[[1]]]]})", z3),
                       doctest::Contains("entries[0][0]"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_matrix(R"({"n":2,"entries":[[[],[]]]})", z3),
                       doctest::Contains("2 rows"), ValidationError);
}

TEST_CASE("coefficients accept decimal strings beyond 64 bits") {
  GroupPtr z2 = z_mod(2);
  GroupRingMatrix m = parse_matrix(
      R"({"n":1,"entries":[[[["123456789012345678901234567890",[1]]]]]})", z2);
  CHECK(m.at(0, 0).terms().begin()->second == Int("123456789012345678901234567890"));
}

TEST_CASE("class vector files fold onto canonical representatives") {
  GroupPtr g = s3_perm();
  // element 3 is a transposition conjugate to element 1
  ClassVector v = parse_class_vector(R"({"coefficients":[[2,3],[1,1]]})", g);
  CHECK(v.coefficient(g->element(1)) == 3);
  CHECK(v.coefficients().size() == 1);
}

TEST_CASE("complex files parse and validate") {
  IdempotentComplex c = parse_complex(slurp(golden_dir() / "complex_s1.json"));
  CHECK(reidemeister_characteristic(c).is_zero());
  CHECK_THROWS_WITH_AS(parse_complex(slurp(golden_dir() / "complex_nonidem.json")),
                       doctest::Contains("degree 2"), PreconditionError);
}

TEST_CASE("reports are deterministic") {
  GroupPtr z4 = load_group(golden_dir() / "z4.json");
  for (ReportFormat f : {ReportFormat::Json, ReportFormat::Text}) {
    CHECK(qgroup_report(z4, 5, true, f) == qgroup_report(z4, 5, true, f));
    CHECK(classes_report(z4, f) == classes_report(z4, f));
  }
}

TEST_CASE("qgroup report pins the reduced Z/4 structure") {
  GroupPtr z4 = load_group(golden_dir() / "z4.json");
  std::string text = qgroup_report(z4, 5, true, ReportFormat::Text);
  CHECK(text.find("structure: Z \xE2\x8A\x95 Z/2\n") != std::string::npos);
  CHECK(text.find("free_rank: 1\n") != std::string::npos);
  CHECK(text.find("torsion: [2]\n") != std::string::npos);
  std::string json_text = qgroup_report(z4, 5, true, ReportFormat::Json);
  CHECK(json_text == slurp(golden_dir() / "qgroup_z4_d5_reduced.json"));
}

TEST_CASE("structure strings") {
  CHECK(structure_string(0, {}) == "0");
  CHECK(structure_string(1, {}) == "Z");
  CHECK(structure_string(3, {Int(2), Int(2)}) == "Z^3 \xE2\x8A\x95 Z/2 \xE2\x8A\x95 Z/2");
}

TEST_CASE("format parsing") {
  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK(parse_format("text") == ReportFormat::Text);
  CHECK_THROWS_AS(parse_format("yaml"), ValidationError);
}

TEST_CASE("missing files are validation errors") {
  CHECK_THROWS_WITH_AS(load_group(golden_dir() / "does_not_exist.json"),
                       doctest::Contains("cannot open"), ValidationError);
}

TEST_CASE("classes report pairs inverse classes") {
  // Z/5: identity plus the two inverse pairs {1,4} and {2,3}
  std::string text = classes_report(load_group(golden_dir() / "z5.json"),
                                    ReportFormat::Text);
  CHECK(text.find("class_count: 5") != std::string::npos);
  CHECK(text.find("index=1 size=1 representative=(1) inverse_class=4") !=
        std::string::npos);
  CHECK(text.find("index=2 size=1 representative=(2) inverse_class=3") !=
        std::string::npos);

  // trivial group: one row
  std::string trivial = classes_report(Group::fg_abelian(0, {}), ReportFormat::Text);
  CHECK(trivial.find("class_count: 1") != std::string::npos);
}
