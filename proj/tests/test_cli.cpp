#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vpb/autfn.h"
#include "vpb/report.h"
#include "vpb/rewriting.h"
#include "vpb/simplicial.h"
#include "vpb/symmetric_action.h"

using namespace vpb;

namespace {

std::string binary() {
  const char* env = std::getenv("VPB_BIN");
  REQUIRE_MESSAGE(env != nullptr, "VPB_BIN must point at the vpb binary");
  return env;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen: counts, formats and exit codes") {
  RunResult gap = run("gen vp --n 4 --format gap");
  CHECK(gap.code == 0);
  size_t names = 0;
  for (size_t p = gap.out.find("\"l"); p != std::string::npos; p = gap.out.find("\"l", p + 1))
    ++names;
  CHECK(names == 12);

  RunResult text = run("gen vp --n 3 --format text");
  CHECK(text.code == 0);
  CHECK(text.out.find("generators (6)") != std::string::npos);
  CHECK(text.out.find("relators (6)") != std::string::npos);

  CHECK(run("gen vp --n 0").code == 2);        // invalid argument
  CHECK(run("gen nosuch --n 3").code == 2);    // unknown kind
  CHECK(run("nosuchcommand").code == 2);       // parse error
}

TEST_CASE("gen json is a thin wrapper over the module") {
  RunResult r = run("gen vp --n 3");
  REQUIRE(r.code == 0);
  Json envelope = Json::parse(r.out);
  CHECK(envelope["schema_version"] == kSchemaVersion);
  CHECK(envelope["report"] == presentation_json(vp_presentation(3)));
}

TEST_CASE("map commands print image words") {
  RunResult r = run("map degeneracy --t 2 --n 3 \"l[1,2]*l[1,3]*l[2,3]\"");
  CHECK(r.code == 0);
  CHECK(r.out == "l[1,2]*l[1,4]*l[1,3]*l[2,4]*l[2,3]\n");
  CHECK(run("map face --t 2 --n 3 \"l[1,3]\"").out == "e\n");
  CHECK(run("map iota --n 2 \"l[2,1]\"").out == "l[2,1]\n");
  CHECK(run("map perm --n 4 --images 2,1,3,4 \"l[1,3]\"").out == "l[2,3]\n");
}

TEST_CASE("oracle eq exit codes follow the verdict") {
  CHECK(run("oracle eq \"l[2,1]*l[1,2]\" \"A[1,2]^-1\" --n 2").code == 0);
  CHECK(run("oracle eq \"l[1,2]\" \"l[2,1]\" --n 2").code == 3);
  CHECK(run("oracle eq \"A[1,4]\" \"A[1,4]\" --n 4 --image-cap 4").code == 4);
}

TEST_CASE("cabled expand") {
  RunResult r = run("cabled expand \"c[2,1]\" --n 3");
  CHECK(r.code == 0);
  CHECK(r.out == "l[3,2]*l[3,1]*l[1,3]*l[2,3]\n");
}

TEST_CASE("verify cover is a thin wrapper and writes reports atomically") {
  std::string path = "/tmp/vpb_cover_test.json";
  RunResult r = run("verify cover --n 4 -o " + path);
  CHECK(r.code == 0);
  Json envelope = Json::parse(slurp(path));
  CHECK(envelope["status"] == "pass");
  CHECK(envelope["report"] == cover_report_json(verify_generator_cover(4)));
  std::remove(path.c_str());
}

TEST_CASE("verify partition reports overlaps without failing the cover") {
  RunResult r = run("verify partition --n 4");
  CHECK(r.code == 0);
  Json envelope = Json::parse(r.out);
  CHECK(envelope["report"]["cover_ok"] == true);
  CHECK(envelope["report"]["disjoint"] == false);
  CHECK(envelope["report"]["overlaps"].size() == 60);
}

TEST_CASE("deterministic reruns are byte-identical") {
  std::string p1 = "/tmp/vpb_det_1.json", p2 = "/tmp/vpb_det_2.json";
  for (const std::string& args :
       {std::string("verify cover --n 5 --deterministic"),
        std::string("verify partition --n 3 --deterministic"),
        std::string("verify simplicial --n-max 3 --deterministic")}) {
    CHECK(run(args + " -o " + p1).code == 0);
    CHECK(run(args + " -o " + p2).code == 0);
    CHECK(slurp(p1) == slurp(p2));
    CHECK_FALSE(slurp(p1).empty());
  }
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("verify tn with a tiny budget reports indeterminate, not failure") {
  RunResult r = run("verify tn --n 3 --exponent-bound 0 --states 10 --depth 1");
  CHECK(r.code == 4);
  Json envelope = Json::parse(r.out);
  CHECK(envelope["status"] == "indeterminate");
  CHECK(envelope["report"]["oracle_failures"] == 0);
}

TEST_CASE("verify lifting exits clean at n=3") {
  RunResult r = run("verify lifting --n 3 --no-certificates");
  CHECK(r.code == 0);
  Json envelope = Json::parse(r.out);
  CHECK(envelope["report"]["certified"] == 30);
  CHECK(envelope["report"]["in_lower"] == 6);
  CHECK(envelope["report"]["relators"].size() == 36);
}

TEST_CASE("more thin-wrapper diffs: partition and simplicial") {
  RunResult r = run("verify partition --n 3");
  REQUIRE(r.code == 0);
  Json envelope = Json::parse(r.out);
  CHECK(envelope["report"] == partition_report_json(verify_relation_partition(3)));

  RunResult s = run("simplicial check --n-max 3");
  REQUIRE(s.code == 0);
  Json env2 = Json::parse(s.out);
  CHECK(env2["report"] ==
        simplicial_report_json(check_simplicial_identities(3, SearchBudget{})));
}

TEST_CASE("worker count does not change the report bytes") {
  std::string p1 = "/tmp/vpb_jobs_1.json", p2 = "/tmp/vpb_jobs_2.json";
  CHECK(run("verify lifting --n 3 -j 1 -o " + p1).code == 0);
  CHECK(run("verify lifting --n 3 -j 2 -o " + p2).code == 0);
  CHECK_FALSE(slurp(p1).empty());
  CHECK(slurp(p1) == slurp(p2));
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("oracle-relators is a thin wrapper") {
  RunResult r = run("verify oracle-relators --n-max 3");
  REQUIRE(r.code == 0);
  Json envelope = Json::parse(r.out);
  CHECK(envelope["report"] == oracle_relators_json(verify_oracle_relators(3)));
}

TEST_CASE("certificate JSON carries the relator origin fields") {
  RunResult r = run("verify lifting --n 3");
  REQUIRE(r.code == 0);
  Json envelope = Json::parse(r.out);
  bool found = false;
  for (const Json& rel : envelope["report"]["relators"]) {
    if (rel["status"] != "certified" || rel["certificate"]["steps"].empty()) continue;
    found = true;
    const Json& step = rel["certificate"]["steps"][0];
    CHECK(step.contains("relator_id"));
    CHECK(step.contains("orientation"));
    CHECK(step.contains("position"));
    CHECK(rel["certificate"].contains("start"));
    CHECK(rel["certificate"].contains("end"));
    break;
  }
  CHECK(found);
}
