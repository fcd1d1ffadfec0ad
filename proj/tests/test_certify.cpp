#include <gtest/gtest.h>

#include "skein/certify.hpp"
#include "skein/verify.hpp"

using namespace skein;

TEST(PhiRank, Examples) {
  EXPECT_EQ(phi_rank(1, ColorKind::kEven, 2), 2u);
  EXPECT_EQ(phi_rank(1, ColorKind::kOdd, 1), 1u);
  EXPECT_EQ(phi_rank(2, ColorKind::kEven, 3), 3u);
  EXPECT_THROW(phi_rank(2, ColorKind::kEven, 2), std::invalid_argument);
}

TEST(PhiRank, GenusOneMatrixEntries) {
  const auto dec = decompose(1, ColorKind::kEven);
  EXPECT_EQ(dec.parts.at(0)(Rational(0)), Rational(-1, 2));
  EXPECT_EQ(dec.parts.at(0)(Rational(1)), Rational(-3, 2));
  EXPECT_EQ(dec.parts.at(1)(Rational(0)), Rational(1, 2));
}

TEST(LowerBound, Values) {
  EXPECT_EQ(lower_bound(0), Integer(1));
  EXPECT_EQ(lower_bound(1), Integer(9));
  EXPECT_EQ(lower_bound(2), Integer(35));
  EXPECT_EQ(lower_bound(4), Integer(519));
  EXPECT_THROW(lower_bound(-1), std::invalid_argument);
}

TEST(Certificate, ValidThroughGenusFive) {
  for (int g = 1; g <= 5; ++g) {
    const Certificate cert = build_certificate(g);
    EXPECT_TRUE(cert.valid) << "g = " << g;
    EXPECT_EQ(cert.dim_00, Integer(g + 1));
    EXPECT_EQ(cert.dim_01, Integer(g));
    EXPECT_EQ(cert.lower_bound, lower_bound(g));
    EXPECT_EQ(cert.dim_00 + cert.dim_01 + cert.other_class_count * cert.other_each, cert.lower_bound);
    for (const auto& c : cert.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  }
  EXPECT_THROW(build_certificate(0), std::invalid_argument);
}

TEST(Certificate, FailedSubCheckMakesItInvalid) {
  // An empty flat-curve range leaves no witness for the remaining classes.
  CertifyOptions options;
  options.flat_p_max = 1;
  const Certificate cert = build_certificate(2, options);
  EXPECT_FALSE(cert.valid);
  bool found = false;
  for (const auto& c : cert.checks)
    if (c.name == "flat_curve_nonvanishing") {
      found = true;
      EXPECT_FALSE(c.passed);
    }
  EXPECT_TRUE(found);
}

TEST(Certificate, JsonSchemaAndDeterminism) {
  const auto a = to_json(build_certificate(2));
  const auto b = to_json(build_certificate(2));
  EXPECT_EQ(a.dump(2), b.dump(2));
  EXPECT_EQ(a["genus"], 2);
  EXPECT_EQ(a["lower_bound"], 35);
  EXPECT_EQ(a["valid"], true);
  EXPECT_EQ(a["components"]["class_00"], 3);
  EXPECT_EQ(a["components"]["class_01"], 2);
  EXPECT_EQ(a["components"]["other_classes"]["count"], 30);
  EXPECT_EQ(a["components"]["other_classes"]["each_at_least"], 1);
  ASSERT_TRUE(a["checks"].is_array());
  for (const auto& c : a["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c["passed"].is_boolean());
    EXPECT_TRUE(c["detail"].is_string());
  }
  EXPECT_FALSE(a["assumptions"].empty());
  // Round trip through text is byte-identical.
  const std::string text = a.dump(2);
  EXPECT_EQ(nlohmann::ordered_json::parse(text).dump(2), text);
}

TEST(Verify, AllSuitesPass) {
  for (const auto& report : run_suite("all")) {
    EXPECT_TRUE(report.passed()) << report.suite;
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << report.suite << "/" << c.name << ": " << c.detail;
  }
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}
