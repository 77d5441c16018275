#include "bespaced/rewrite.hpp"

#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "support/random_terms.hpp"
#include "support/worked_models.hpp"

namespace bespaced {
namespace {

using testing::b1;
using testing::Rng;

const Invariant kT = True{};
const Invariant kF = False{};
const Invariant kA = Owner{"a"};

TEST(Simplify, ImpliesFalsePremise) {
  EXPECT_EQ(simplify(Implies{False{}, OccupyBox{1, 1, 10, 10}}), kT);
}

TEST(Simplify, TimeSeriesBranchPruning) {
  const Invariant input = BigAnd{{Implies{False{}, b1()}, Implies{TimePoint{1}, b1()}, True{}}};
  const Invariant expected = Implies{TimePoint{1}, b1()};
  // Expected value first confirmed by the single-redex reference rewriter.
  ASSERT_EQ(testing::reference_simplify(input), expected);
  EXPECT_EQ(simplify(input), expected);
}

TEST(Simplify, AtomIsFixpoint) { EXPECT_EQ(simplify(kT), kT); }

TEST(ApplyOnce, Examples) {
  auto step = apply_once(kT);
  EXPECT_FALSE(step.changed);
  EXPECT_EQ(step.term, kT);

  step = apply_once(And{True{}, False{}});
  EXPECT_TRUE(step.changed);
  EXPECT_EQ(step.term, kF);

  // Both NOT(NOT(TRUE)) traversal orders must end at TRUE.
  const Invariant nn = Not{Invariant{Not{True{}}}};  // Not{Not{..}} would copy
  ASSERT_EQ(testing::reference_simplify(nn), kT);
  step = apply_once(nn);
  EXPECT_TRUE(step.changed);
  EXPECT_EQ(simplify(nn), kT);
}

TEST(ApplyOnce, UnchangedReturnsSameNode) {
  const Invariant t = testing::time_series();
  auto step = apply_once(t);
  EXPECT_FALSE(step.changed);
  EXPECT_TRUE(step.term.same_node(t));
}

struct RuleCase {
  const char* name;
  Invariant input;
  Invariant expected;
};

class RuleTableTest : public ::testing::TestWithParam<int> {};

std::vector<RuleCase> rule_cases() {
  return {
      {"implies-false-premise", Implies{False{}, kA}, kT},
      {"implies-true-premise", Implies{True{}, kA}, kA},
      {"implies-true-conclusion", Implies{kA, True{}}, kT},
      {"and-true-left", And{True{}, kA}, kA},
      {"and-true-right", And{kA, True{}}, kA},
      {"and-false-left", And{False{}, kA}, kF},
      {"and-false-right", And{kA, False{}}, kF},
      {"or-false-left", Or{False{}, kA}, kA},
      {"or-false-right", Or{kA, False{}}, kA},
      {"or-true-left", Or{True{}, kA}, kT},
      {"or-true-right", Or{kA, True{}}, kT},
      {"not-true", Not{True{}}, kF},
      {"not-false", Not{False{}}, kT},
      {"bigand-false", BigAnd{{kA, False{}, kA}}, kF},
      {"bigand-drop-true", BigAnd{{kA, True{}, Owner{"b"}}}, BigAnd{{kA, Owner{"b"}}}},
      {"bigand-empty", BigAnd{}, kT},
      {"bigand-singleton", BigAnd{{kA}}, kA},
      {"bigor-true", BigOr{{kA, True{}}}, kT},
      {"bigor-drop-false", BigOr{{False{}, kA, Owner{"b"}}}, BigOr{{kA, Owner{"b"}}}},
      {"bigor-empty", BigOr{}, kF},
      {"bigor-singleton", BigOr{{kA}}, kA},
  };
}

TEST(RuleTable, EachRuleFiresOnItsPattern) {
  const auto cases = rule_cases();
  ASSERT_EQ(cases.size(), rule_table().size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& rule = rule_table()[i];
    EXPECT_EQ(rule.name, cases[i].name);
    auto r = rule.apply(cases[i].input);
    ASSERT_TRUE(r.has_value()) << rule.name;
    EXPECT_EQ(*r, cases[i].expected) << rule.name;
  }
}

TEST(RuleTable, RulesShrinkOrEmptyToConstant) {
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const Invariant t = testing::random_term(rng, 4);
    for (const auto& rule : rule_table()) {
      if (auto r = rule.apply(t)) {
        const bool empty_big = t.size() == 1 && (t.is<BigAnd>() || t.is<BigOr>());
        if (empty_big) {
          EXPECT_TRUE(r->is<True>() || r->is<False>());
        } else {
          EXPECT_LT(r->size(), t.size()) << rule.name << " on " << t;
        }
      }
    }
  }
}

TEST(Simplify, NoContradictionDetection) {
  const Invariant t = And{kA, Not{kA}};
  EXPECT_EQ(simplify(t), t);
  const Invariant u = Or{kA, Not{kA}};
  EXPECT_EQ(simplify(u), u);
}

TEST(Simplify, NestedCollapse) {
  EXPECT_EQ(simplify(BigOr{{BigAnd{{True{}, True{}}}, kA}}), kT);
  EXPECT_EQ(simplify(Implies{Not{Or{False{}, False{}}}, kA}), kA);
  EXPECT_EQ(simplify(BigAnd{{BigOr{}, kA}}), kF);
}

// ── Properties ──────────────────────────────────────────────────────────────

TEST(SimplifyProperty, IdempotentAndFixpoint) {
  Rng rng(42);
  for (int i = 0; i < 10000; ++i) {
    const Invariant t = testing::random_term(rng, 6);
    const auto trace = simplify_traced(t);
    EXPECT_EQ(simplify(trace.result), trace.result) << t;
    EXPECT_TRUE(is_simplified(trace.result)) << t;
    EXPECT_LE(trace.rewriting_passes, t.size());
    EXPECT_LE(trace.result.size(), t.size());
  }
}

TEST(SimplifyProperty, SizeNeverGrowsAcrossPasses) {
  Rng rng(43);
  for (int i = 0; i < 2000; ++i) {
    Invariant t = testing::random_term(rng, 6);
    for (;;) {
      auto step = apply_once(t);
      if (!step.changed) break;
      EXPECT_LE(step.term.size(), t.size());
      t = step.term;
    }
  }
}

TEST(SimplifyProperty, TraversalOrdersAndReferenceAgree) {
  Rng rng(44);
  for (int i = 0; i < 2000; ++i) {
    const Invariant t = testing::random_term(rng, 6);
    const Invariant left = simplify_traced(t, Traversal::LeftToRight).result;
    const Invariant right = simplify_traced(t, Traversal::RightToLeft).result;
    EXPECT_EQ(left, right) << t;
    EXPECT_EQ(left, testing::reference_simplify(t)) << t;
  }
}

}  // namespace
}  // namespace bespaced
