#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "reid/codec.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(REID_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir = fs::temp_directory_path() / "reid_cli_test";
    fs::remove_all(dir);
    ASSERT_EQ(run("theorem --basis A --out " + dir.string()).status, 0);
  }
  static void TearDownTestSuite() { fs::remove_all(dir); }
  static fs::path dir;
};

fs::path CliTest::dir;

TEST_F(CliTest, TheoremWritesSevenCertificates) {
  int n = 0;
  for (auto& e : fs::directory_iterator(dir / "theorem" / "A")) n += e.path().extension() == ".cert";
  EXPECT_EQ(n, 7);
  EXPECT_TRUE(fs::exists(dir / "thetas.txt"));
  EXPECT_TRUE(fs::exists(dir / "report.txt"));
  EXPECT_TRUE(fs::exists(dir / "lemma" / "a_b.cert"));
}

TEST_F(CliTest, VerifyAcceptsAndRejectsTampering) {
  auto path = (dir / "bridge" / "A_to_c.cert").string();
  EXPECT_EQ(run("verify " + path).status, 0);
  auto c = reid::parse_certificate(reid::read_file(path));
  // Swap over and under at one crossing of step 1: relabel its slots.
  auto& d = c.steps.at(0).result;
  int id = d.crossings().front().id;
  auto cs = d.crossings();
  cs.front().sign = reid::negate(cs.front().sign);
  int shift = d.crossings().front().sign == reid::CrossingSign::positive ? 1 : 3;
  std::vector<reid::Edge> es;
  for (auto e : d.edges()) {
    if (!e.from.is_leg() && e.from.index == id) e.from.slot = (e.from.slot + shift) % 4;
    if (!e.to.is_leg() && e.to.index == id) e.to.slot = (e.to.slot + shift) % 4;
    es.push_back(e);
  }
  d = reid::TangleDiagram(d.legs(), cs, es);
  auto bad = (dir / "tampered.cert").string();
  reid::write_file(bad, reid::serialize_certificate(c));
  auto r = run("verify " + bad);
  EXPECT_EQ(r.status, 4);
  EXPECT_NE(r.out.find("step 1"), std::string::npos) << r.out;
}

TEST_F(CliTest, MirrorOutputVerifies) {
  auto out = (dir / "mirrored.cert").string();
  ASSERT_EQ(run("mirror " + (dir / "bridge" / "A_to_c.cert").string() + " -o " + out).status, 0);
  EXPECT_EQ(run("verify " + out + " --basis R2 a").status, 0);
}

TEST(CliExitCodes, SearchOutcomes) {
  EXPECT_EQ(run("derive --from c-up --to flip --basis R2 A").status, 0);
  EXPECT_EQ(run("derive --from c-up --to flip --basis R2 --max-crossings 5").status, 3);
  EXPECT_EQ(run("derive --from c-up --to flip --basis r2-par-over-reduce").status, 2);
  EXPECT_EQ(run("derive --from c-up --to flip --basis bogus").status, 1);
  EXPECT_EQ(run("derive --from q-up --to flip --basis R2").status, 1);
  EXPECT_EQ(run("verify /nonexistent.cert").status, 1);
  EXPECT_EQ(run("").status, 1);
}

TEST(CliOutput, TrianglesAndThetas) {
  auto t = run("triangles");
  EXPECT_EQ(t.status, 0);
  std::size_t blocks = 0;
  for (std::size_t p = 0; (p = t.out.find("# ", p)) != std::string::npos; ++p) ++blocks;
  EXPECT_EQ(blocks, 16u);
  auto th = run("thetas");
  EXPECT_EQ(th.status, 0);
  EXPECT_EQ(th.out, reid::read_file(GOLDEN_DIR "/thetas.txt"));
}

TEST(CliOutput, LemmaPair) {
  auto r = run("lemma --pair a b");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("b => a  steps 3"), std::string::npos) << r.out;
  EXPECT_EQ(run("lemma --pair a A").status, 1);
}

}  // namespace
