#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef SKEINBOUND_EXE
#error "SKEINBOUND_EXE must name the command-line binary"
#endif

namespace {

struct Result {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args`; `redirect` is appended verbatim (e.g. "2>&1 1>/dev/null")
// and `env` is prepended (e.g. "VAR=value").
Result run(const std::string& args, const std::string& redirect = "2>/dev/null",
           const std::string& env = "") {
  const std::string cmd = env + " '" + SKEINBOUND_EXE + "' " + args + " " + redirect;
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool has_float_literal(const std::string& text) {
  for (std::size_t i = 1; i + 1 < text.size(); ++i)
    if (text[i] == '.' && std::isdigit(static_cast<unsigned char>(text[i - 1])) &&
        std::isdigit(static_cast<unsigned char>(text[i + 1])))
      return true;
  return false;
}

}  // namespace

TEST(Cli, CertifyGenusOneJson) {
  const Result r = run("certify --genus 1 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["lower_bound"], 9);
  EXPECT_EQ(j["valid"], true);
}

TEST(Cli, DimGenusOne) {
  const Result r = run("dim --genus 1 --p 7 --color 0");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, VerifyBernoulli) { EXPECT_EQ(run("verify --suite bernoulli").status, 0); }

TEST(Cli, JsonRoundTripsByteIdentically) {
  for (const std::string args :
       {"certify --genus 2 --format json", "dim --genus 2 --p 5 --color 1 --format json",
        "poly --genus 2 --kind odd --format json", "decompose --genus 3 --format json",
        "bernoulli --max 8 --polynomials --format json", "eval-curve --genus 2 --p 7 --color 3 --format json",
        "table --genus-max 2 --p-max 7 --format json", "verify --suite verlinde --format json"}) {
    const Result r = run(args);
    ASSERT_EQ(r.status, 0) << args;
    EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out) << args;
  }
}

TEST(Cli, PolyUsesCanonicalOrder) {
  EXPECT_EQ(run("poly --genus 1").out, "-1/2 + 1/2*p - c\n");
  EXPECT_EQ(run("poly --genus 1 --kind odd").out, "s\n");
}

TEST(Cli, TableIsSortedAndDeterministic) {
  const Result a = run("table --genus-max 3 --p-max 9");
  const Result b = run("table --genus-max 3 --p-max 9");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream is(a.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "genus,p,color,dimension");
  std::array<long, 3> prev{-1, -1, -1};
  int rows = 0;
  while (std::getline(is, line)) {
    std::array<long, 3> key{};
    char comma = 0;
    std::istringstream ls(line);
    ls >> key[0] >> comma >> key[1] >> comma >> key[2];
    EXPECT_LT(prev, key) << line;
    prev = key;
    ++rows;
  }
  EXPECT_EQ(rows, 3 * (2 + 4 + 6 + 8));
}

TEST(Cli, NoFloatsWithoutEmbed) {
  const Result exact = run("eval-curve --genus 2 --p 5 --color 1 --format json");
  ASSERT_EQ(exact.status, 0);
  EXPECT_FALSE(has_float_literal(exact.out));
  EXPECT_FALSE(nlohmann::ordered_json::parse(exact.out).contains("embedding"));
  const Result embedded = run("eval-curve --genus 2 --p 5 --color 1 --embed --format json");
  ASSERT_EQ(embedded.status, 0);
  EXPECT_TRUE(nlohmann::ordered_json::parse(embedded.out).contains("embedding"));
  for (const std::string args : {"certify --genus 3 --format json", "decompose --genus 4 --kind odd --format json",
                                 "verify --suite all --format json"})
    EXPECT_FALSE(has_float_literal(run(args).out)) << args;
}

TEST(Cli, EvalCurveCoefficientVector) {
  const Result r = run("eval-curve --genus 1 --p 7 --color 3 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j["coefficients"].size(), 6u);
  EXPECT_EQ(j["coefficients"][0], "2");
  for (std::size_t k = 1; k < 6; ++k) EXPECT_EQ(j["coefficients"][k], "0");
}

TEST(Cli, UsageErrorsExitTwoWithStructuredRecord) {
  for (const std::string args : {"", "bogus", "dim --genus 1 --p 4 --color 0", "dim --genus 1 --p 7 --color 9",
                                 "dim --p 7 --color 0", "certify --genus 0", "verify --suite nope",
                                 "eval-curve --genus 2 --p 5 --color 5", "poly --genus 1 --format xml"}) {
    const Result r = run(args, "2>&1 1>/dev/null");
    EXPECT_EQ(r.status, 2) << args;
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    ASSERT_FALSE(j.is_discarded()) << args << ": " << r.out;
    EXPECT_EQ(j["error"]["exit_code"], 2);
    EXPECT_EQ(j["error"]["kind"], "usage");
  }
}

TEST(Cli, OutputFileHonoursEnvironmentDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "skeinbound_cli_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "cert.json";
  std::filesystem::remove(file);
  const Result r = run("certify --genus 1 --format json --output cert.json", "2>/dev/null",
                       "SKEINBOUND_OUTPUT_DIR='" + dir.string() + "'");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(file);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), run("certify --genus 1 --format json").out);
  std::filesystem::remove_all(dir);
}
