#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using aci::cli::run;

namespace {

aci::cli::CommandResult call(std::vector<std::string> args) {
  args.insert(args.begin(), "acikit");
  return run(args);
}

}  // namespace

TEST(Cli, HilbertOfCi) {
  const auto r = call({"hf", "ci", "--degrees", "3,3,3"});
  ASSERT_TRUE(r.ok) << r.message;
  EXPECT_EQ(r.text, "[1,3,6,7,6,3,1]");
}

TEST(Cli, TMax) {
  const auto r = call({"classify", "tmax", "--a", "4"});
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.text, "5");
  EXPECT_EQ(r.payload["t_max"], 5);
}

TEST(Cli, MonomialAciWithVerification) {
  const auto r = call({"aci", "monomial", "--degrees", "2,2,2", "--h", "3", "--verify"});
  ASSERT_TRUE(r.ok) << r.message;
  EXPECT_EQ(r.text, "x^2, y^2, z^3, xz\nHF matches CI(2,2,2): true");
}

TEST(Cli, Link) {
  const auto r = call({"--json", "liaison", "link", "--z", "2,2,3", "--hq", "1,3,3,1"});
  ASSERT_TRUE(r.ok) << r.message;
  EXPECT_EQ(r.payload["hg"], nlohmann::json::parse("[1,2,1]"));
  EXPECT_EQ(r.payload["e"], 4);
  EXPECT_EQ(r.payload["theta"], 7);
  EXPECT_TRUE(r.json_output);
}

TEST(Cli, Envelope) {
  const auto r = call({"--json", "hf", "recognize", "--h", "1,3,1"});
  ASSERT_TRUE(r.ok);
  const auto e = r.envelope();
  EXPECT_EQ(e["status"], "ok");
  EXPECT_TRUE(e["payload"].is_null());
  EXPECT_EQ(e["provenance"], nlohmann::json::parse(R"(["ci-recognition"])"));
  EXPECT_EQ(r.text, "none");
}

TEST(Cli, ErrorsCarryCodes) {
  const auto usage = call({"frobnicate"});
  EXPECT_FALSE(usage.ok);
  EXPECT_EQ(usage.error_code, "usage");
  EXPECT_EQ(usage.exit_code(), 1);

  const auto missing = call({"hf", "ci"});
  EXPECT_EQ(missing.error_code, "usage");

  const auto range = call({"aci", "monomial", "--degrees", "2,2,2", "--h", "5"});
  EXPECT_FALSE(range.ok);
  EXPECT_EQ(range.error_code, "out_of_range");
  EXPECT_EQ(range.envelope()["error"]["code"], "out_of_range");

  const auto odd = call({"pfaffian", "sub", "--delta", "2,3,3,4,4", "--delete", "1,2"});
  EXPECT_EQ(odd.error_code, "invalid_input");

  const auto kind = call({"export", "cas", "--kind", "singular"});
  EXPECT_EQ(kind.error_code, "unsupported");

  const auto bad_json = call({"betti", "oracle", "--ideal", "{not json"});
  EXPECT_EQ(bad_json.error_code, "invalid_input");
}

TEST(Cli, BettiOracleWithExpectation) {
  const auto r = call({"betti", "oracle", "--witness", "2", "--expect",
                       R"({"c":3,"levels":[[0],[2,2,2,3],[3,4,4,4,5],[5,6]]})"});
  ASSERT_TRUE(r.ok) << r.message;
  EXPECT_TRUE(r.payload["matches"].get<bool>());

  const auto ci = call({"betti", "oracle", "--ideal", R"({"c":3,"gens":[[2,0,0],[0,2,0],[0,0,2]]})"});
  ASSERT_TRUE(ci.ok) << ci.message;
  EXPECT_EQ(ci.payload["table"]["levels"], nlohmann::json::parse("[[0],[2,2,2],[4,4,4],[6]]"));
}

TEST(Cli, ClassifyAndGorenstein) {
  const auto tables = call({"classify", "tables", "--a", "3", "--h", "5"});
  ASSERT_TRUE(tables.ok);
  EXPECT_EQ(tables.payload["tables"].size(), 3u);

  EXPECT_EQ(call({"classify", "dstar", "--a", "3", "--h", "5", "--parity", "odd"}).text, "5");
  EXPECT_EQ(call({"gorenstein", "delta-low", "--a", "3", "--h", "5"}).text, "[2,3,3,4,4]");
  EXPECT_EQ(call({"gorenstein", "delta-high", "--a", "3", "--h", "6"}).text, "[3,3,3,4,5]");
  EXPECT_TRUE(call({"gorenstein", "gaeta", "--delta", "2,3,3,4,4"}).payload["ok"].get<bool>());
  EXPECT_FALSE(call({"gorenstein", "gaeta", "--delta", "2,2,5,5,5,5,6"}).payload["ok"].get<bool>());
}

TEST(Cli, PfaffianIndicesAreOneBased) {
  EXPECT_EQ(call({"pfaffian", "alt", "--delta", "2,3,3,4,4", "--sub", "1"}).text, "-x24*x35 + x25*x34");
  EXPECT_EQ(call({"pfaffian", "sub", "--delta", "2,3,3,4,4", "--delete", "1,2,5"}).text, "x34");
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "classify", "tables", "--a", "4", "--h", "7"},
           {"export", "cas", "--kind", "example-maximal"},
           {"--json", "pfaffian", "example"},
           {"--json", "liaison", "cone", "--table", R"({"c":3,"levels":[[0],[2,2,2,3],[3,4,4,4,5],[5,6]]})", "--z",
            "2,2,3"}}) {
    const auto first = call(args);
    const auto second = call(args);
    ASSERT_TRUE(first.ok) << first.message;
    EXPECT_EQ(first.text, second.text);
    EXPECT_EQ(first.envelope().dump(), second.envelope().dump());
  }
}

TEST(Cli, ExportWritesIntoOutputDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "acikit-cli-test";
  std::filesystem::create_directories(dir);
  ::setenv("ACIKIT_OUT_DIR", dir.c_str(), 1);
  const auto r = call({"export", "cas", "--kind", "example-cancelled", "--out", "w.m2"});
  ::unsetenv("ACIKIT_OUT_DIR");
  ASSERT_TRUE(r.ok) << r.message;
  std::ifstream in(dir / "w.m2");
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), call({"export", "cas", "--kind", "example-cancelled"}).text);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyMonomialScopePasses) {
  for (const char* scope : {"monomial", "section3"}) {
    const auto r = call({"verify", "--scope", scope, "--max-degree", "5"});
    EXPECT_TRUE(r.ok) << r.text;
    EXPECT_TRUE(r.payload["passed"].get<bool>());
    EXPECT_EQ(r.payload["checks"].size(), 2u);
  }
}

TEST(Cli, VerifyPfaffianScopePasses) {
  const auto r = call({"verify", "--scope", "pfaffian"});
  EXPECT_TRUE(r.ok) << r.text;
}

TEST(Cli, VerifyUnknownScope) { EXPECT_EQ(call({"verify", "--scope", "nope"}).error_code, "invalid_input"); }
