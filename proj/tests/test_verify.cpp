#include <gtest/gtest.h>

#include "equibasis/verify.hpp"

using namespace equibasis;

namespace {

void expect_all_pass(const VerifyReport& report) {
  EXPECT_FALSE(report.checks.empty());
  for (const auto& c : report.checks)
    EXPECT_TRUE(c.passed || c.informational) << c.name << ": " << c.value << " vs " << c.threshold;
  EXPECT_TRUE(report.passed());
}

}  // namespace

TEST(Verify, ReciprocityScopePasses) { expect_all_pass(run_verification({VerifyScope::reciprocity, 20, {}})); }

TEST(Verify, GaussScopePasses) { expect_all_pass(run_verification({VerifyScope::gauss, 10, {}})); }

TEST(Verify, GraphScopePasses) { expect_all_pass(run_verification({VerifyScope::graph, 10, {}})); }

TEST(Verify, MultipartiteScopePasses) { expect_all_pass(run_verification({VerifyScope::multipartite, 4, {}})); }

TEST(Verify, ImpossibleToleranceFails) {
  const VerifyReport report = run_verification({VerifyScope::all, 4, 1e-30});
  EXPECT_FALSE(report.passed());
}

TEST(Verify, InformationalChecksNeverFail) {
  VerifyReport report;
  report.checks.push_back({"note", 5.0, 0.0, false, true});
  EXPECT_TRUE(report.passed());
  report.checks.push_back({"real", 5.0, 1.0, false, false});
  EXPECT_FALSE(report.passed());
}

TEST(Verify, RejectsTinyDmax) { EXPECT_THROW(run_verification({VerifyScope::all, 1, {}}), contract_error); }
