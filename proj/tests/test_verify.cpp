#include <gtest/gtest.h>

#include "extspec/errors.hpp"
#include "extspec/verify.hpp"

using namespace extspec;

class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, PassesWithFixedSeed) {
  const Report r = verify_suite(GetParam(), 7);
  EXPECT_EQ(r.name, GetParam());
  ASSERT_FALSE(r.checks.empty());
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " value " << c.value << " bound " << c.bound;
}

TEST_P(Suite, PassesWithOtherSeed) {
  const Report r = verify_suite(GetParam(), 20261016);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " value " << c.value << " bound " << c.bound;
}

INSTANTIATE_TEST_SUITE_P(All, Suite, ::testing::ValuesIn(suite_names()));

TEST(VerifySuite, SpecfunHasKConsistency) {
  const Report r = verify_suite("specfun", 7);
  bool found = false;
  for (const auto& c : r.checks) found = found || c.name.find("K = Im psi(i)") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(VerifySuite, Deterministic) {
  const Report a = verify_suite("kernel", 3), b = verify_suite("kernel", 3);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) EXPECT_EQ(a.checks[k].value, b.checks[k].value);
}

TEST(VerifySuite, UnknownName) { EXPECT_THROW(verify_suite("nope", 1), DomainError); }
