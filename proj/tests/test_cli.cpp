#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "patchideal/cli/cli.hpp"

namespace {

using patchideal::cli::Json;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "patchideal_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = patchideal::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(Cli, PatchText) {
  Result r = run({"patch", "--family", "peterson", "--n", "4", "--w", "2143"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("g[3][1]"), std::string::npos);
  EXPECT_NE(r.out.find("z[3][2]*z[3][1]*z[1][1] - z[3][1]^2 - z[3][2] + z[4][1]"), std::string::npos);
}

TEST(Cli, PatchJson) {
  Json j = run_json({"patch", "--n", "4", "--w", "2143"});
  EXPECT_EQ(j["schemaVersion"], 1);
  EXPECT_EQ(j["family"], "peterson");
  EXPECT_EQ(j["generators"].size(), 3u);
  EXPECT_EQ(j["vars"].size(), 6u);
  EXPECT_FALSE(j["setTheoretic"].get<bool>());
  Json empty = run_json({"patch", "--n", "2", "--w", "21"});
  EXPECT_TRUE(empty["generators"].empty());
}

TEST(Cli, LocalJson) {
  Json j = run_json({"local", "--w", "2134"});
  EXPECT_FALSE(j["smooth"].get<bool>());
  EXPECT_EQ(j["h"], Json::parse("[1, 1]"));
  EXPECT_EQ(j["mult"], 2);
  EXPECT_EQ(j["dimension"], 3);
  EXPECT_EQ(j["kFactored"], "(1 - chi^2)*(1 - chi^3)*(1 - chi^4)");
  EXPECT_EQ(j["cone"], Json::parse(R"(["z[3][2] - z[4][1]", "z[4][2]", "z[4][1]^2"])"));
}

TEST(Cli, SurveyJson) {
  Json j = run_json({"survey", "--n", "4"});
  EXPECT_EQ(j["singular"], Json::parse(R"(["1234", "1243", "1324", "2134", "2143"])"));
  EXPECT_EQ(j["rows"].size(), 8u);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["k"], row["kFormula"]);
  Json v = run_json({"survey", "--n", "5", "--verdicts-only"});
  EXPECT_EQ(v["singular"].size(), 13u);
}

TEST(Cli, OutputIsIndependentOfJobCount) {
  Result a = run({"survey", "--n", "4", "--format", "json", "--jobs", "1"});
  Result b = run({"survey", "--n", "4", "--format", "json", "--jobs", "3"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Result c = run({"probe", "--w", "2143", "--jobs", "2"});
  Result d = run({"probe", "--w", "2143"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, OtherFamilies) {
  Json r = run_json({"richardson", "--n", "3", "--w", "132", "--u", "321", "--v", "132"});
  EXPECT_EQ(r["family"], "richardson");
  ASSERT_EQ(r["generators"].size(), 1u);
  EXPECT_EQ(r["generators"][0]["text"], "z[2][2]");
  Json h = run_json({"hessenberg", "--jordan", "2,1", "--hfunc", "1,2,3", "--w", "132"});
  EXPECT_TRUE(h["setTheoretic"].get<bool>());
  EXPECT_EQ(h["generators"].size(), 3u);
  Json ps = run_json({"pet-schubert", "--wp", "3214"});
  EXPECT_TRUE(ps["singular"].get<bool>());
  Json ps2 = run_json({"pet-schubert", "--wp", "2143"});
  EXPECT_FALSE(ps2["singular"].get<bool>());
  Json g = run_json({"pet-schubert", "--wq", "1234", "--wp", "3214", "--blocks"});
  EXPECT_EQ(g["family"], "peterson-schubert");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"patch", "--w", "1123"}).code, 2);
  EXPECT_EQ(run({"patch", "--w", "2143", "--bogus"}).code, 2);
  EXPECT_EQ(run({"patch", "--w", "2143", "--format", "xml"}).code, 2);
  Result np = run({"patch", "--w", "1342"});
  EXPECT_EQ(np.code, 3);
  EXPECT_NE(np.err.find("not a parabolic"), std::string::npos);
  EXPECT_EQ(run({"richardson", "--w", "123", "--u", "321", "--v", "132"}).code, 3);
  EXPECT_EQ(run({"hessenberg", "--n", "4", "--hfunc", "1,3,4,4", "--w", "4321"}).code, 3);
  EXPECT_EQ(run({"probe", "--w", "2134", "--samples", "0"}).code, 2);
}

TEST(Cli, OutFlagWritesFile) {
  auto path = std::filesystem::temp_directory_path() / "patchideal_cli_out.json";
  Result r = run({"patch", "--w", "2143", "--format", "json", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(slurp(path.string()))["generators"].size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, ProbeGoldensForSingularStrataOfPet4) {
  for (const char* w : {"1234", "1243", "1324", "2134", "2143"}) {
    Result r = run({"probe", "--n", "4", "--w", w, "--samples", "5", "--seed", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string golden = slurp(std::string(PATCHIDEAL_GOLDEN_DIR) + "/probe_pet4_" + w + ".json");
    ASSERT_FALSE(golden.empty()) << w;
    EXPECT_EQ(r.out, golden) << w;
    Json j = Json::parse(r.out);
    EXPECT_TRUE(j["allMultWithinBound"].get<bool>());
    EXPECT_TRUE(j["allHNonnegative"].get<bool>());
  }
}

}  // namespace
