#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int exit_code;
  std::string out;
};

const std::string kSource = KEDL_SOURCE_DIR;

Result kedl(const std::string& args) {
  const std::string cmd = std::string(KEDL_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Result r{-1, ""};
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("kedl-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }
  fs::path dir_;
};

const std::string kGas = kSource + "/data/gas.kedl";

}  // namespace

TEST_F(Cli, Check) {
  EXPECT_EQ(kedl("check " + kGas).exit_code, 0);
  EXPECT_EQ(kedl("check /nonexistent").exit_code, 2);
  const Result bad = kedl("--no-timings check " + file("bad.kedl", "oconcept C; oindividual c1; C <= bot; C(c1);").string());
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.out.rfind("inconsistent\ntrace:\n", 0), 0u);
  EXPECT_EQ(kedl("check " + file("syntax.kedl", "oconcept C C;").string()).exit_code, 2);
  EXPECT_EQ(kedl("check " + file("sort.kedl", "oconcept C; aconcept A; C <= A;").string()).exit_code, 2);
}

TEST_F(Cli, WitnessModelOutRoundTrips) {
  const fs::path model = dir_ / "w.model";
  ASSERT_EQ(kedl("sat " + kGas + " -c Tunnel --model-out " + model.string()).exit_code, 0);
  const Result eval = kedl("--no-timings eval " + kGas + " --model " + model.string() + " -c Tunnel");
  EXPECT_EQ(eval.exit_code, 0);
  EXPECT_NE(eval.out, "{}\n");
}

TEST_F(Cli, ReasoningCommands) {
  EXPECT_EQ(kedl("--no-timings subsumes " + kGas + " -s Gas-explosion -t \"some has-location Location\"").out, "true\n");
  EXPECT_EQ(kedl("subsumes " + kGas + " -s Gas -t \"some has-location Location\"").exit_code, 1);
  EXPECT_EQ(kedl("subsumes " + kGas + " -s Gas -t Length").exit_code, 2);
  EXPECT_EQ(kedl("sat " + kGas + " -c bot").exit_code, 1);
  EXPECT_EQ(kedl("sat " + kGas + " -c \"Tunnel and some has-length (some more-than Meters1200)\"").exit_code, 0);
  const fs::path kb = file("inst.kedl", "oconcept C, D; oindividual c1; C(c1); C <= D;");
  EXPECT_EQ(kedl("instance " + kb.string() + " -i c1 -c D").exit_code, 0);
  EXPECT_EQ(kedl("instance " + kb.string() + " -i c1 -c \"not D\"").exit_code, 1);
  EXPECT_EQ(kedl("instance " + kb.string() + " -i nobody -c D").exit_code, 2);
  const Result cls = kedl("--no-timings classify " + file("cls.kedl", "oconcept C, D, E; C := D and E;").string());
  EXPECT_EQ(cls.out, "object:\n  C < D, E\n  D < top\n  E < top\nattribute:\n");
}

TEST_F(Cli, Modes) {
  const fs::path kb = file("m.kedl", "aconcept A; xrole r;");
  EXPECT_EQ(kedl("sat " + kb.string() + " -c \"some r A and some r (not A)\"").exit_code, 1);
  EXPECT_EQ(kedl("--mode unrestricted sat " + kb.string() + " -c \"some r A and some r (not A)\"").exit_code, 0);
  EXPECT_EQ(kedl("--mode exactly-one sat " + kb.string() + " -c \"all r bot\"").exit_code, 1);
  EXPECT_EQ(kedl("--mode sometimes sat " + kb.string() + " -c A").exit_code, 2);
}

TEST_F(Cli, Oracle) {
  const Result none = kedl("--no-timings oracle --find-model -c \"C and not C\" --bounds 3,3");
  EXPECT_EQ(none.exit_code, 1);
  EXPECT_EQ(none.out, "no model up to (3,3)\n");
  const Result count = kedl("--no-timings oracle --count -c \"some has-r A\" --bounds 1,1");
  EXPECT_EQ(count.exit_code, 0);
  EXPECT_EQ(count.out, "1\n");
  const Result counter =
      kedl("--no-timings oracle --valid -f \"some p C <= all p C\" --decl \"orole p; oconcept C;\" --bounds 3,1");
  EXPECT_EQ(counter.exit_code, 1);
  EXPECT_EQ(counter.out.rfind("countermodel\ndelta: x1 x2;\n", 0), 0u);
  EXPECT_EQ(kedl("oracle --valid -f \"some inv(r) (all r A) <= A\" --decl \"xrole r; aconcept A;\"").exit_code, 0);
  EXPECT_EQ(kedl("oracle --find-model --kb " + kGas + " -c Gas --bounds 1,5").exit_code, 0);
  EXPECT_EQ(kedl("oracle --count --find-model -c C").exit_code, 2);
  EXPECT_EQ(kedl("oracle --find-model -c C --bounds 0,1").exit_code, 2);
}

TEST_F(Cli, OracleBoundsFromEnvironment) {
  const std::string cmd = "--no-timings oracle --find-model -c \"C and not C\"";
  EXPECT_EQ(kedl(cmd).out, "no model up to (2,2)\n");
  ::setenv("KEDL_BOUNDS", "1,3", 1);
  EXPECT_EQ(kedl(cmd).out, "no model up to (1,3)\n");
  EXPECT_EQ(kedl(cmd + " --bounds 2,1").out, "no model up to (2,1)\n");
  ::setenv("KEDL_BOUNDS", "x", 1);
  EXPECT_EQ(kedl(cmd).exit_code, 2);
  ::unsetenv("KEDL_BOUNDS");
}

TEST_F(Cli, VerifySuite) {
  const Result one = kedl("--no-timings verify-suite --only axiom16");
  EXPECT_EQ(one.exit_code, 0);
  EXPECT_EQ(one.out,
            "PASS axiom16  tableau valid, oracle valid  some inv(r) (all r A) => A\n"
            "1/1 passed (oracle bounds (2,2))\n");
  EXPECT_EQ(kedl("verify-suite --only axiom99").exit_code, 2);

  const Result a = kedl("--format struct --no-timings verify-suite --bounds 2,2");
  const Result b = kedl("--format struct --no-timings verify-suite --bounds 3,3");
  ASSERT_EQ(a.exit_code, 0);
  ASSERT_EQ(b.exit_code, 0);
  const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(ja["schema"], "kedl-report/1");
  EXPECT_EQ(ja["verdicts"], jb["verdicts"]);
  EXPECT_EQ(ja["verdicts"].size(), 122u);
}

TEST_F(Cli, KmTranslateIsGoldenAndStable) {
  const fs::path a = dir_ / "a.kedl", b = dir_ / "b.kedl";
  ASSERT_EQ(kedl("km translate " + kSource + "/data/gas.km -o " + a.string()).exit_code, 0);
  ASSERT_EQ(kedl("km translate " + kSource + "/data/gas.km -o " + b.string()).exit_code, 0);
  EXPECT_EQ(slurp(a), slurp(kSource + "/tests/data/gas.kedl.golden"));
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(kedl("km translate " + kSource + "/data/gas.km").out, slurp(a));
  EXPECT_EQ(kedl("check " + a.string()).exit_code, 0);
}

TEST_F(Cli, KmErrors) {
  EXPECT_EQ(kedl("km validate " + kSource + "/data/gas.km").exit_code, 0);
  const fs::path dangling = file("d.km", "object Gas { attributes: Pressure; }");
  const Result v = kedl("--no-timings km validate " + dangling.string());
  EXPECT_EQ(v.exit_code, 1);
  EXPECT_EQ(v.out, "Gas.attributes: 'Pressure' is not a declared attribute\n");
  const Result t = kedl("--format struct km translate " + dangling.string());
  EXPECT_EQ(t.exit_code, 2);
  const auto j = nlohmann::json::parse(t.out);
  EXPECT_EQ(j["details"][0]["element"], "Gas");
  EXPECT_EQ(kedl("km validate " + file("m.km", "attribute S { measurability: 2; }").string()).exit_code, 2);
}

TEST_F(Cli, Eval) {
  const fs::path kb = file("e.kedl", "oconcept C, D;");
  const fs::path model = file("e.model", "delta: x1 x2;\nsigma: u1;\nC = {x1, x2};\nD = {x1};\n");
  EXPECT_EQ(kedl("--no-timings eval " + kb.string() + " --model " + model.string() + " -c \"C and not D\"").out,
            "{x2}\n");
  EXPECT_EQ(kedl("eval " + kb.string() + " --model " + model.string() + " -f \"C <= D\"").exit_code, 1);
  EXPECT_EQ(
      kedl("eval " + kb.string() + " --model " + model.string() + " -f \"C <= D\" --reading paper-existential").exit_code,
      0);
}

TEST_F(Cli, StructuredReportsAreDeterministic) {
  const std::string cmd = "--format struct --no-timings check " + kGas;
  const Result a = kedl(cmd), b = kedl(cmd);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["exit"], 0);
  EXPECT_EQ(j["verdicts"][0]["verdict"], "consistent");
  EXPECT_FALSE(j.contains("timings"));
  const auto timed = nlohmann::json::parse(kedl("--format struct check " + kGas).out);
  EXPECT_TRUE(timed["timings"].contains("total_seconds"));
}
