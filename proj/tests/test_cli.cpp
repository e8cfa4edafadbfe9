#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(SIDONLAB_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sidonlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path(name)) << body;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ConstructThenVerifyDim11) {
  for (const char* variant : {"listed", "roots23"}) {
    const auto set = path(std::string(variant) + ".set");
    ASSERT_EQ(run("construct dim11 --variant " + std::string(variant) + " -o " + set).code, 0);
    const CliResult v = run("verify " + set + " --assert kcover=1 --assert srg=2048,276,44,36 --assert linearity=8");
    EXPECT_EQ(v.code, 0) << variant;
    const auto j = nlohmann::json::parse(v.out);
    EXPECT_EQ(j["kcover"], 1);
    EXPECT_EQ(j["affine_dim"], 11);
    EXPECT_EQ(j["srg_combinatorial"], true);
  }
}

TEST_F(Cli, FailedAssertionExitsOne) {
  const auto set = write("t.set", "dim 2\n0\n1\n2\n3\n");
  EXPECT_EQ(run("verify " + set + " --assert sidon").code, 1);
  EXPECT_EQ(run("verify " + set + " --assert not-sidon").code, 0);
}

TEST_F(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run("verify " + write("dup.set", "dim 3\n1\n1\n")).code, 2);
  EXPECT_EQ(run("verify " + write("range.set", "dim 3\n9\n")).code, 2);
  EXPECT_EQ(run("verify " + path("missing.set")).code, 2);
  EXPECT_EQ(run("verify " + write("ok.set", "dim 3\n1\n") + " --assert nonsense").code, 2);
  EXPECT_EQ(run("construct nothing").code, 2);
  EXPECT_EQ(run("bounds --odd-n 4").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, ResourceGuardExitsThree) {
  const auto big = write("big.set", "dim 17\n0\n1\n");
  EXPECT_EQ(run("cayley " + big + " --export edgelist").code, 3);
  EXPECT_EQ(run("verify " + write("huge.set", "dim 21\n0\n")).code, 3);
}

TEST_F(Cli, CayleySpectrumAndExport) {
  const auto set = path("apn.set");
  ASSERT_EQ(run("construct apn-graph --m 3 --d 3 -o " + set).code, 0);
  const CliResult sp = run("cayley " + set + " --spectrum");
  EXPECT_EQ(sp.code, 0);
  EXPECT_EQ(sp.out, "28:1 4:28 -4:35\n");
  const CliResult el = run("cayley " + set + " --export edgelist");
  EXPECT_EQ(el.code, 0);
  EXPECT_EQ(el.out.substr(0, el.out.find('\n')), "p 64 896");
  const CliResult dot = run("cayley " + set + " --export dot -o " + path("g.dot"));
  EXPECT_EQ(dot.code, 0);
  EXPECT_TRUE(fs::exists(path("g.dot")));
}

TEST_F(Cli, BoundsCsv) {
  const CliResult b = run("bounds --odd-n 5..13");
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out,
            "n,dim,base,improved,witness_file\n5,9,22,23,\n7,13,74,75,\n9,17,278,279,\n"
            "11,21,1068,1069,\n13,25,4186,4187,\n");
  const CliResult w = run("bounds --odd-n 7 --witness --witness-dir " + dir_.string());
  EXPECT_EQ(w.code, 0);
  ASSERT_TRUE(fs::exists(path("witness_n7.set")));
  EXPECT_EQ(run("verify " + path("witness_n7.set") + " --assert sidon").code, 0);
}

TEST_F(Cli, BoundsJson) {
  const CliResult b = run("bounds --odd-n 5,7 --witness --format json");
  ASSERT_EQ(b.code, 0);
  const auto j = nlohmann::json::parse(b.out);
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[0]["witness_size"], 22);
  EXPECT_EQ(j[1]["witness_size"], 75);
  EXPECT_EQ(j[1]["witness_reaches_improved"], true);
}

TEST_F(Cli, HalvingFromFile) {
  const auto g = path("g.set");
  ASSERT_EQ(run("construct subgroup --n 6 --j 3 -o " + g).code, 0);
  const auto h = path("h.set");
  ASSERT_EQ(run("construct halving --in " + g + " -o " + h).code, 0);
  const CliResult v = run("verify " + h + " --assert sidon");
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(nlohmann::json::parse(v.out)["size"], 7);
}

TEST_F(Cli, KloostermanReport) {
  const CliResult k = run("kloosterman --m 3");
  ASSERT_EQ(k.code, 0);
  const auto j = nlohmann::json::parse(k.out);
  EXPECT_EQ(j["linearity"], 5);
  EXPECT_EQ(j["subfield_1_minus_k"], j["subfield_points"]);
}

TEST_F(Cli, ScanIsDeterministicAcrossThreadCounts) {
  const CliResult a = run("scan --n 5 --count 300 --seed 7");
  const CliResult b = run("scan --n 5 --count 300 --seed 7");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::string one = std::string("SIDONLAB_THREADS=1 ") + SIDONLAB_CLI + " scan --n 5 --count 300 --seed 7";
  FILE* p = popen(one.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  pclose(p);
  EXPECT_EQ(out, a.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["equivalence_failures"], 0);
}
