#include <gtest/gtest.h>

#include <random>

#include "monoidlab/rees.hpp"
#include "support/oracles.hpp"

using monoidlab::CheckOptions;
using monoidlab::Identity;
using monoidlab::Outcome;
using monoidlab::Word;
using monoidlab::rees::ReesElement;
using monoidlab::rees::ReesMonoid;

namespace {
  Word w(char const* text) {
    return Word::parse(text);
  }

  ReesMonoid m_of(std::vector<Word> const& ws) {
    return ReesMonoid::build(ws);
  }

  std::vector<Word> random_w(std::mt19937_64& rng) {
    std::vector<Word> ws;
    for (int i = std::uniform_int_distribution<int>(1, 2)(rng); i > 0; --i) {
      ws.push_back(oracle::random_word(rng, 1, 6, 4));
    }
    return ws;
  }
}  // namespace

TEST(ReesMonoid, DegenerateCases) {
  auto const empty = m_of({});
  EXPECT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty.identity_id(), empty.zero_id());
  EXPECT_EQ(empty.id_of(ReesElement(Word())), empty.identity_id());

  auto const one = m_of({Word()});
  EXPECT_EQ(one.size(), 2u);
  EXPECT_NE(one.identity_id(), one.zero_id());
}

TEST(ReesMonoid, Sizes) {
  EXPECT_EQ(m_of({w("x")}).size(), 3u);
  EXPECT_EQ(m_of({w("x y")}).size(), 5u);
  EXPECT_EQ(m_of({w("x t1 x")}).size(), 7u);
  EXPECT_EQ(m_of({w("x y"), w("y x")}).size(), 6u);
}

TEST(ReesMonoid, Multiplication) {
  auto const m = m_of({w("x t1 x")});
  EXPECT_EQ(m.multiply(ReesElement(w("x")), ReesElement(w("t1 x"))), ReesElement(w("x t1 x")));
  EXPECT_TRUE(m.multiply(ReesElement(w("x")), ReesElement(w("x"))).is_zero());
  EXPECT_TRUE(m.multiply(ReesElement::zero(), ReesElement(Word())).is_zero());
  EXPECT_THROW((void) m.id_of(ReesElement(w("x x"))), std::invalid_argument);
  EXPECT_THROW((void) m.element(99), std::out_of_range);
}

TEST(ReesMonoid, Evaluate) {
  auto const                  m = m_of({w("x y")});
  monoidlab::rees::Assignment psi{{monoidlab::Letter("a"), ReesElement(w("x"))},
                                  {monoidlab::Letter("b"), ReesElement(w("y"))}};
  EXPECT_EQ(m.evaluate(w("a b"), psi), ReesElement(w("x y")));
  EXPECT_TRUE(m.evaluate(w("b a"), psi).is_zero());
  EXPECT_THROW((void) m.evaluate(w("c"), psi), std::invalid_argument);
}

TEST(ReesProperty, TablesMatchConcatenation) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto const ws = random_w(rng);
    auto const m  = m_of(ws);
    oracle::Rees const o(ws);
    ASSERT_EQ(m.size(), o.elements.size());
    for (auto const& a : o.elements) {
      for (auto const& b : o.elements) {
        auto const ea = a ? ReesElement(*a) : ReesElement::zero();
        auto const eb = b ? ReesElement(*b) : ReesElement::zero();
        auto const ab = o.multiply(a, b);
        EXPECT_EQ(m.multiply(ea, eb), ab ? ReesElement(*ab) : ReesElement::zero());
      }
    }
    EXPECT_TRUE(m.is_associative());
  }
}

TEST(Satisfies, KnownIdentities) {
  auto const mxy = m_of({w("x y")});
  EXPECT_EQ(satisfies(mxy, Identity::parse("x x = x x x")).outcome, Outcome::holds);
  EXPECT_EQ(satisfies(mxy, Identity::parse("x y x = x x y")).outcome, Outcome::holds);
  EXPECT_EQ(satisfies(mxy, Identity::parse("x y = y x")).outcome, Outcome::fails);

  auto const chain = m_of({w("x t1 x")});
  EXPECT_EQ(satisfies(chain, Identity::parse("x t x = x x t")).outcome, Outcome::fails);
  EXPECT_EQ(satisfies(chain, Identity::parse("x x y = y x x")).outcome, Outcome::holds);
  // The right side has a letter the left side lacks.
  EXPECT_EQ(satisfies(chain, Identity::parse("x = x y")).outcome, Outcome::fails);

  auto const trivial = m_of({});
  EXPECT_EQ(satisfies(trivial, Identity::parse("x = y")).outcome, Outcome::holds);
  auto const one = m_of({Word()});
  EXPECT_EQ(satisfies(one, Identity::parse("x = y")).outcome, Outcome::fails);
  EXPECT_EQ(satisfies(one, Identity::parse("x y = y x")).outcome, Outcome::holds);
}

TEST(Satisfies, WitnessReplays) {
  auto const m = m_of({w("x t1 x")});
  auto const id = Identity::parse("x t x = x x t");
  auto const v  = satisfies(m, id);
  ASSERT_EQ(v.outcome, Outcome::fails);
  EXPECT_NE(m.evaluate(id.lhs, v.witness), m.evaluate(id.rhs, v.witness));
}

TEST(Satisfies, BudgetGivesUnknown) {
  auto const   m = m_of({w("x y z x y z")});
  CheckOptions opts;
  opts.budget = 3;
  EXPECT_EQ(satisfies(m, Identity::parse("x y z = x y z"), opts).outcome, Outcome::unknown);
  EXPECT_EQ(satisfies_naive(m, Identity::parse("x y z t s = x y z t s"), 10).outcome,
            Outcome::unknown);
}

TEST(SatisfiesProperty, AgreesWithBruteForce) {
  std::mt19937_64 rng(32);
  int             holds = 0, fails = 0;
  for (int trial = 0; trial < 250; ++trial) {
    auto const       ws = random_w(rng);
    auto const       id = oracle::random_identity(rng, 5, 3);
    auto const       m  = m_of(ws);
    oracle::Rees const o(ws);
    bool const       expected = o.holds(id);
    auto const       v        = satisfies(m, id);
    ASSERT_NE(v.outcome, Outcome::unknown);
    EXPECT_EQ(v.outcome == Outcome::holds, expected) << id.to_string();
    EXPECT_EQ(satisfies_naive(m, id).outcome, v.outcome) << id.to_string();
    if (v.outcome == Outcome::fails) {
      ++fails;
      EXPECT_NE(m.evaluate(id.lhs, v.witness), m.evaluate(id.rhs, v.witness));
    } else {
      ++holds;
    }
  }
  EXPECT_GT(holds, 20);
  EXPECT_GT(fails, 20);
}

TEST(SatisfiesProperty, ParallelMatchesSequential) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    auto const   m  = m_of(random_w(rng));
    auto const   id = oracle::random_identity(rng, 6, 4);
    CheckOptions par;
    par.jobs      = 4;
    auto const a  = satisfies(m, id);
    auto const b  = satisfies(m, id, par);
    EXPECT_EQ(a.outcome, b.outcome);
    EXPECT_EQ(a.witness, b.witness);
  }
}
