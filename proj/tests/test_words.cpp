#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "monoidlab/words.hpp"
#include "support/oracles.hpp"

using monoidlab::Letter;
using monoidlab::LetterSet;
using monoidlab::Word;

namespace {
  Word w(char const* text) {
    return Word::parse(text);
  }
}  // namespace

TEST(Letter, ParseAndPrint) {
  EXPECT_EQ(Letter::parse("x").to_string(), "x");
  EXPECT_EQ(Letter::parse("t12").to_string(), "t12");
  EXPECT_EQ(Letter::parse("t12").base(), "t");
  EXPECT_EQ(Letter::parse("t12").index(), 12u);
  EXPECT_FALSE(Letter::parse("t").index().has_value());
  EXPECT_NE(Letter::parse("t"), Letter::parse("t0"));
}

TEST(Letter, RejectsMalformedTokens) {
  for (char const* bad : {"", "1", "X", "t-1", "abcdefg", "x y", "3x", "t1a"}) {
    EXPECT_THROW((void) Letter::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Letter, OrderIsBaseThenIndex) {
  EXPECT_LT(Letter::parse("t"), Letter::parse("t0"));
  EXPECT_LT(Letter::parse("t2"), Letter::parse("t10"));
  EXPECT_LT(Letter::parse("t99"), Letter::parse("x"));
  EXPECT_LT(Letter::parse("a"), Letter::parse("ab"));
}

TEST(Word, GrammarRoundTrip) {
  EXPECT_EQ(w("x t1 x t2 x").to_string(), "x t1 x t2 x");
  EXPECT_EQ(w("1").to_string(), "1");
  EXPECT_TRUE(w("1").empty());
  EXPECT_THROW((void) w("   "), std::invalid_argument);
  EXPECT_EQ(w("  x\ty  ").to_string(), "x y");
  EXPECT_THROW((void) w("x 1 y"), std::invalid_argument);
}

TEST(Word, ShortlexOrder) {
  EXPECT_LT(w("1"), w("x"));
  EXPECT_LT(w("y"), w("x x"));
  EXPECT_LT(w("x y"), w("y x"));
  EXPECT_LT(w("x t1"), w("x t2"));
}

TEST(Word, Factor) {
  EXPECT_EQ(w("x y z").factor(1, 2), w("y z"));
  EXPECT_EQ(w("x y z").factor(3, 0), Word());
  EXPECT_THROW((void) w("x y z").factor(2, 2), std::out_of_range);
}

TEST(Word, LetterSets) {
  Word const u = w("x t1 x y t2 y y");
  EXPECT_EQ(monoidlab::occurrences(u, Letter::parse("y")), 3u);
  EXPECT_EQ(monoidlab::simple_letters(u), (LetterSet{Letter::parse("t1"), Letter::parse("t2")}));
  EXPECT_EQ(monoidlab::multiple_letters(u), (LetterSet{Letter::parse("x"), Letter::parse("y")}));
  EXPECT_EQ(monoidlab::delete_letters(u, {Letter::parse("x")}), w("t1 y t2 y y"));
  EXPECT_EQ(monoidlab::restrict_to(u, {Letter::parse("x")}), w("x x"));
}

TEST(Word, FactorsOfChainWord) {
  auto const f = monoidlab::factors(std::vector<Word>{w("x t1 x")});
  // 1, x, t1, x t1, t1 x, x t1 x
  EXPECT_EQ(f.size(), 6u);
  EXPECT_TRUE(f.contains(Word()));
  EXPECT_TRUE(f.contains(w("t1 x")));
  EXPECT_TRUE(monoidlab::factors(std::vector<Word>{}).empty());
}

TEST(Word, Occurrences) {
  Word const u = w("x y x z x");
  auto const x = Letter::parse("x");
  EXPECT_EQ(monoidlab::locate_occurrence(u, x, 3).position, 4u);
  EXPECT_THROW((void) monoidlab::locate_occurrence(u, x, 4), std::out_of_range);
  EXPECT_TRUE(monoidlab::occurrence_precedes(u, monoidlab::locate_occurrence(u, x, 1),
                                             monoidlab::locate_occurrence(u, Letter::parse("y"), 1)));
}

TEST(Word, CanonicalRename) {
  EXPECT_EQ(monoidlab::canonical_rename(w("t1 x t1 z")), w("a b a c"));
  EXPECT_EQ(monoidlab::canonical_letter(0), Letter::parse("a"));
  EXPECT_EQ(monoidlab::canonical_letter(26), Letter::parse("a1"));
}

TEST(WordProperty, FactorsMatchBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Word> ws;
    for (int i = std::uniform_int_distribution<int>(0, 3)(rng); i > 0; --i) {
      ws.push_back(oracle::random_word(rng, 0, 7, 3));
    }
    auto const expected = ws.empty() ? std::set<Word>{} : oracle::factors(ws);
    EXPECT_EQ(monoidlab::factors(ws), expected);
    for (auto const& f : expected) {
      bool found = false;
      for (auto const& g : ws) {
        found = found || monoidlab::is_factor(f, g);
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(WordProperty, ParsePrintRoundTrip) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    Word const u = oracle::random_word(rng, 0, 9, 5);
    EXPECT_EQ(Word::parse(u.to_string()), u);
  }
}

TEST(WordProperty, ShortlexIsTotalAndConsistent) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    Word const a = oracle::random_word(rng, 0, 4, 2);
    Word const b = oracle::random_word(rng, 0, 4, 2);
    if (a.size() != b.size()) {
      EXPECT_EQ(a < b, a.size() < b.size());
    }
    EXPECT_EQ(a == b, !(a < b) && !(b < a));
    if (a == b) {
      EXPECT_EQ(monoidlab::WordHash{}(a), monoidlab::WordHash{}(b));
    }
  }
}
