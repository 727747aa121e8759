#include <gtest/gtest.h>

#include <thread>

#include "subkmp/error.hpp"
#include "subkmp/half_integer.hpp"
#include "subkmp/oracle.hpp"
#include "subkmp/properties.hpp"
#include "subkmp/solvers.hpp"
#include "subkmp/zoo.hpp"

using namespace subkmp;

namespace {

HardnessParams params8() { return HardnessParams::with_beta(8, ElementSet::from_indices(8, {0, 1, 2, 3}), 3); }

}  // namespace

TEST(ElementSet, WordAndListRepresentationsAgree) {
  for (std::size_t n : {5u, 64u, 65u, 130u}) {
    ElementSet a = ElementSet::from_indices(n, {0, 2, static_cast<Element>(n - 1)});
    ElementSet b = ElementSet::from_indices(n, {2, 3});
    EXPECT_EQ((a | b).size(), 4u);
    EXPECT_EQ((a & b).elements(), std::vector<Element>{2});
    EXPECT_EQ((a - b).size(), 2u);
    EXPECT_EQ(a.complement().size(), n - 3);
    EXPECT_EQ(a.intersection_size(b), 1u);
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_FALSE(a.is_subset_of(b));
    EXPECT_EQ(ElementSet::full(n).size(), n);
    EXPECT_TRUE(ElementSet(n).empty());
  }
}

TEST(ElementSet, EqualityIsMembership) {
  ElementSet a = ElementSet::from_indices(70, {1, 69});
  ElementSet b(70);
  b.insert(69);
  b.insert(1);
  EXPECT_EQ(a, b);
  b.erase(1);
  EXPECT_NE(a, b);
}

TEST(ElementSet, RejectsOutOfRange) {
  EXPECT_THROW(ElementSet::from_indices(4, {4}), Error);
  ElementSet s(4);
  try {
    s.insert(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  EXPECT_THROW((void)s.contains(4), Error);
}

TEST(ElementSet, Text) {
  EXPECT_EQ(ElementSet::from_indices(8, {0, 2}).to_string(), "{0,2}");
  EXPECT_EQ(ElementSet(3).to_string(), "{}");
  EXPECT_EQ(ElementSet::from_indices(8, {0, 1, 2, 3}).to_hex(), "0x0f");
  EXPECT_EQ(ElementSet::from_mask(8, 0x59).to_hex(), "0x59");
}

TEST(ElementSet, CanonicalOrderIsSizeThenLex) {
  const auto a = ElementSet::from_indices(4, {3});
  const auto b = ElementSet::from_indices(4, {0, 1});
  const auto c = ElementSet::from_indices(4, {0, 2});
  EXPECT_TRUE(canonical_less(a, b));
  EXPECT_TRUE(canonical_less(b, c));
  EXPECT_FALSE(canonical_less(c, b));
}

TEST(HalfInteger, ExactDecimals) {
  EXPECT_EQ(HalfInteger::from_int(4).to_string(), "4");
  EXPECT_EQ(HalfInteger::from_halves(7).to_string(), "3.5");
  EXPECT_EQ(HalfInteger::from_halves(-1).to_string(), "-0.5");
  EXPECT_EQ(HalfInteger::from_halves(3) + HalfInteger::from_halves(1), HalfInteger::from_int(2));
  EXPECT_LT(HalfInteger::from_halves(5), HalfInteger::from_int(3));
}

TEST(Evaluate, F1Examples) {
  const ValueOracle f1 = make_hardness(HardnessKind::F1, params8());
  EXPECT_EQ(evaluate(f1, ElementSet(8)), 0.0);
  EXPECT_EQ(evaluate(f1, ElementSet::full(8)), 0.0);
  EXPECT_EQ(evaluate(f1, ElementSet::from_indices(8, {1, 3, 5, 7})), 2.0);
  EXPECT_EQ(f1.exact(ElementSet::from_indices(8, {1, 3, 5, 7})), HalfInteger::from_int(2));
}

TEST(Evaluate, GroundMismatchIsRejected) {
  const ValueOracle f = make_cardinality(4);
  EXPECT_THROW(f(ElementSet(5)), Error);
}

TEST(Evaluate, Deterministic) {
  const ValueOracle f = make_hardness(HardnessKind::F2, params8());
  const auto s = ElementSet::from_indices(8, {0, 4, 5});
  const double first = f(s);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(f(s), first);
}

TEST(WrapCounting, CountsEvaluations) {
  const ValueOracle f3 = make_hardness(HardnessKind::F3, params8());
  auto [counted, ledger] = wrap_counting(f3);
  EXPECT_EQ(ledger->count(), 0u);
  for (Element v = 0; v < 5; ++v) counted(ElementSet::from_indices(8, {v}));
  EXPECT_EQ(ledger->count(), 5u);
  EXPECT_EQ(ledger->log().size(), 5u);
  // exact() goes through the same ledger
  (void)counted.exact(ElementSet::full(8));
  EXPECT_EQ(ledger->count(), 6u);
  ledger->reset();
  EXPECT_EQ(ledger->count(), 0u);
  EXPECT_TRUE(ledger->log().empty());
  // the unwrapped oracle is untouched
  f3(ElementSet(8));
  EXPECT_EQ(ledger->count(), 0u);
}

TEST(WrapCounting, LogIsCapped) {
  auto ledger = std::make_shared<QueryLedger>(3);
  const ValueOracle f = wrap_counting(make_cardinality(4), ledger);
  for (int i = 0; i < 10; ++i) f(ElementSet(4));
  EXPECT_EQ(ledger->count(), 10u);
  EXPECT_EQ(ledger->log().size(), 3u);
}

TEST(WrapCounting, ThreadSafeCount) {
  auto ledger = std::make_shared<QueryLedger>();
  const ValueOracle f = wrap_counting(make_cardinality(16), ledger);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&] {
      for (int i = 0; i < 1000; ++i) f(ElementSet::full(16));
    });
  }
  for (auto& th : pool) th.join();
  EXPECT_EQ(ledger->count(), 4000u);
}

TEST(WrapCounting, Algorithm1QueriesEachSingletonOnce) {
  auto [f, ledger] = wrap_counting(make_truncated_cardinality(10, 3));
  (void)algorithm1(f, 4);
  EXPECT_EQ(ledger->count(), 10u);
}

TEST(CheckProperties, ModularUnitWeights) {
  const std::vector<double> w(4, 1.0);
  const PropertyReport r = check_properties(make_modular(w), Exhaustive{});
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.submodular.holds);
  EXPECT_TRUE(r.monotone.holds);
  EXPECT_TRUE(r.nonnegative.holds);
  ASSERT_FALSE(r.symmetric.holds);
  EXPECT_EQ(r.symmetric.witness->s, ElementSet::from_indices(4, {0}));
  EXPECT_TRUE(r.claims_confirmed());
}

TEST(CheckProperties, TriangleInternalWitness) {
  const GraphSpec k3{3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}};
  const PropertyReport r = check_properties(make_graph_functions(k3).internal, Exhaustive{});
  ASSERT_FALSE(r.submodular.holds);
  const auto& w = *r.submodular.witness;
  EXPECT_EQ(w.a, ElementSet::from_indices(3, {0}));
  EXPECT_EQ(w.b, ElementSet::from_indices(3, {0, 1}));
  EXPECT_EQ(w.v, 2u);
  EXPECT_EQ(w.marginal_a, 1.0);
  EXPECT_EQ(w.marginal_b, 2.0);
  EXPECT_TRUE(w.a.is_subset_of(w.b));
  EXPECT_FALSE(w.b.contains(w.v));
  EXPECT_LT(submodularity_slack(make_graph_functions(k3).internal, w.a, w.b, w.v), 0.0);
}

TEST(CheckProperties, F2IsSymmetricSubmodularNotMonotone) {
  const PropertyReport r = check_properties(make_hardness(HardnessKind::F2, params8()), Exhaustive{});
  EXPECT_TRUE(r.submodular.holds);
  EXPECT_TRUE(r.symmetric.holds);
  EXPECT_TRUE(r.nonnegative.holds);
  ASSERT_FALSE(r.monotone.holds);
  EXPECT_TRUE(r.monotone.witness->a.is_subset_of(r.monotone.witness->b));
  EXPECT_TRUE(r.claims_confirmed());
}

TEST(CheckProperties, ShiftedFunctionIsNegativeSomewhere) {
  const PropertyReport r = check_properties(make_shifted(make_cardinality(3), 1.5), Exhaustive{});
  ASSERT_FALSE(r.nonnegative.holds);
  EXPECT_EQ(r.nonnegative.witness->s, ElementSet(3));
  EXPECT_TRUE(r.submodular.holds);
}

TEST(CheckProperties, RandomizedIsSeededAndAgrees) {
  const GraphSpec k3{3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}};
  const auto h = make_graph_functions(k3).internal;
  const PropertyReport a = check_properties(h, Randomized{2000, 5});
  const PropertyReport b = check_properties(h, Randomized{2000, 5});
  EXPECT_FALSE(a.exhaustive);
  EXPECT_FALSE(a.submodular.holds);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.submodular.witness->a, b.submodular.witness->a);
  const PropertyReport f4 = check_properties(make_hardness(HardnessKind::F4, params8()), Randomized{3000, 1});
  EXPECT_TRUE(f4.claims_confirmed());
}

TEST(CheckProperties, ExhaustiveRefusesLargeGround) {
  EXPECT_THROW(check_properties(make_cardinality(20), Exhaustive{14}), Error);
}
