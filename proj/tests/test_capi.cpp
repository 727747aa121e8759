#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "subkmp/subkmp.h"

namespace {

const char* kF2Instance =
    R"({"n": 8, "k": 5, "function": {"type": "hardness", "kind": "F2", "beta": 3, "r_seed": 7}, "seed": 7})";

}  // namespace

TEST(CApi, SolverRegistry) {
  std::vector<std::string> names;
  for (size_t i = 0; i < subkmp_solver_count(); ++i) names.emplace_back(subkmp_solver_name(i));
  EXPECT_EQ(names.size(), 5u);
  EXPECT_EQ(subkmp_solver_name(names.size()), nullptr);
  EXPECT_STRNE(subkmp_version(), "");
}

TEST(CApi, ParseSolveAndInspect) {
  subkmp_instance* inst = nullptr;
  ASSERT_EQ(subkmp_instance_parse(kF2Instance, nullptr, &inst), SUBKMP_OK);
  EXPECT_EQ(subkmp_instance_n(inst), 8u);
  EXPECT_EQ(subkmp_instance_k(inst), 5u);
  EXPECT_EQ(subkmp_instance_seed(inst), 7u);
  EXPECT_STREQ(subkmp_instance_solver(inst), "exact");
  EXPECT_NE(std::string(subkmp_instance_fingerprint(inst)).find("beta=3"), std::string::npos);

  subkmp_report* report = nullptr;
  ASSERT_EQ(subkmp_solve(inst, nullptr, &report), SUBKMP_OK);
  EXPECT_STREQ(subkmp_report_solver(report), "exact");
  EXPECT_LE(subkmp_report_objective(report), 3.0);
  EXPECT_STREQ(subkmp_report_objective_text(report), "3");
  EXPECT_EQ(subkmp_report_block_count(report), 5u);
  size_t total = 0;
  for (size_t i = 0; i < 5; ++i) {
    uint32_t buf[8];
    const size_t len = subkmp_report_block(report, i, buf, 8);
    EXPECT_GT(len, 0u);
    total += len;
  }
  EXPECT_EQ(total, 8u);
  EXPECT_EQ(subkmp_report_block(report, 9, nullptr, 0), 0u);
  EXPECT_GT(subkmp_report_queries(report), 0u);
  subkmp_report_free(report);
  subkmp_instance_free(inst);
}

TEST(CApi, StatusCodes) {
  subkmp_instance* inst = nullptr;
  EXPECT_EQ(subkmp_instance_parse("{", nullptr, &inst), SUBKMP_INPUT_ERROR);
  EXPECT_STRNE(subkmp_last_error(), "");
  EXPECT_EQ(subkmp_instance_parse(nullptr, nullptr, &inst), SUBKMP_INPUT_ERROR);
  EXPECT_EQ(subkmp_instance_load("/nonexistent/instance.json", &inst), SUBKMP_INPUT_ERROR);

  ASSERT_EQ(subkmp_instance_parse(R"({"n": 3, "k": 4, "function": {"type": "cardinality"}})", nullptr, &inst),
            SUBKMP_OK);
  subkmp_report* report = nullptr;
  EXPECT_EQ(subkmp_solve(inst, "algorithm1", &report), SUBKMP_INFEASIBLE);
  EXPECT_EQ(report, nullptr);
  subkmp_instance_free(inst);

  ASSERT_EQ(subkmp_instance_parse(R"({"n": 8, "k": 4, "function": {"type": "cardinality"}})", nullptr, &inst),
            SUBKMP_OK);
  subkmp_instance_set_max_states(inst, 100);
  EXPECT_EQ(subkmp_solve(inst, "exact", &report), SUBKMP_BUDGET_EXCEEDED);
  EXPECT_EQ(subkmp_solve(inst, "no-such-solver", &report), SUBKMP_INPUT_ERROR);
  subkmp_instance_free(inst);

  // a contract violation is reported as an input error
  ASSERT_EQ(subkmp_instance_parse(R"({"n": 8, "k": 5, "function": {"type": "hardness", "kind": "F1", "beta": 3}})",
                                  nullptr, &inst),
            SUBKMP_OK);
  EXPECT_EQ(subkmp_solve(inst, "algorithm1", &report), SUBKMP_INPUT_ERROR);
  subkmp_instance_free(inst);
  subkmp_instance_free(nullptr);
}

TEST(CApi, GapReport) {
  subkmp_gap_options opts{};
  opts.kind = SUBKMP_GAP_SYMMETRIC;
  opts.n = 8;
  opts.beta = 3;
  opts.exhaustive = 1;
  subkmp_gap_report* r = nullptr;
  ASSERT_EQ(subkmp_gap_run(&opts, &r), SUBKMP_OK);
  EXPECT_EQ(subkmp_gap_k(r), 5u);
  EXPECT_DOUBLE_EQ(subkmp_gap_epsilon(r), 0.5);
  EXPECT_STREQ(subkmp_gap_value_easy(r), "4");
  EXPECT_STREQ(subkmp_gap_hard_bound(r), "3");
  EXPECT_GE(subkmp_gap_ratio(r), 4.0 / 3.0 - 1e-12);
  EXPECT_EQ(subkmp_gap_partitions_checked(r), 126000u);
  EXPECT_EQ(std::string(subkmp_gap_r_hex(r)).substr(0, 2), "0x");
  subkmp_gap_report_free(r);

  opts.n = 7;
  EXPECT_EQ(subkmp_gap_run(&opts, &r), SUBKMP_INPUT_ERROR);
}

TEST(CApi, DistinguishReport) {
  subkmp_distinguish_options opts{};
  opts.kind = SUBKMP_GAP_MONOTONE;
  opts.n = 64;
  opts.seed = 4;
  opts.queries = 5000;
  subkmp_distinguish_report* r = nullptr;
  ASSERT_EQ(subkmp_distinguish_run(&opts, &r), SUBKMP_OK);
  EXPECT_EQ(subkmp_distinguish_beta(r), 24);
  EXPECT_EQ(subkmp_distinguish_equivalence_failures(r), 0u);
  EXPECT_EQ(subkmp_distinguish_ledger_count(r), 20000u);
  EXPECT_STREQ(subkmp_distinguish_distribution(r), "p-half");
  subkmp_distinguish_report_free(r);
}

TEST(CApi, PropertyCheck) {
  subkmp_property_report* r = nullptr;
  ASSERT_EQ(subkmp_check_function(
                R"({"n": 3, "type": "graph-internal", "graph": {"vertices": 3, "edges": [[0,1,1],[1,2,1],[0,2,1]]}})", 0,
                0, &r),
            SUBKMP_OK);
  EXPECT_FALSE(subkmp_property_holds(r, SUBKMP_PROP_SUBMODULAR));
  EXPECT_TRUE(subkmp_property_holds(r, SUBKMP_PROP_MONOTONE));
  EXPECT_STREQ(subkmp_property_witness(r, SUBKMP_PROP_SUBMODULAR), "A={0} B={0,1} v=2 marginals 1 < 2");
  EXPECT_STREQ(subkmp_property_oracle_name(r), "graph-internal");
  subkmp_property_report_free(r);

  ASSERT_EQ(subkmp_check_function(R"({"n": 8, "type": "hardness", "kind": "F3", "beta": 3})", 500, 1, &r), SUBKMP_OK);
  EXPECT_TRUE(subkmp_property_claimed(r, SUBKMP_PROP_MONOTONE));
  EXPECT_TRUE(subkmp_property_holds(r, SUBKMP_PROP_MONOTONE));
  subkmp_property_report_free(r);

  EXPECT_EQ(subkmp_check_function(R"({"type": "cardinality"})", 0, 0, &r), SUBKMP_INPUT_ERROR);
}
