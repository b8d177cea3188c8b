#include <gtest/gtest.h>

#include <sstream>

#include "monoidlab/io.hpp"

using monoidlab::Identity;
using monoidlab::Word;

TEST(ReadWords, CommentsAndBlanks) {
  std::istringstream in("# W\nx t1 x\n\n1\n  x y  # pair\n");
  auto const         ws = monoidlab::io::read_words(in);
  ASSERT_EQ(ws.size(), 3u);
  EXPECT_TRUE(ws[1].empty());
  EXPECT_EQ(ws[2], Word::parse("x y"));
}

TEST(ReadWords, ReportsLine) {
  std::istringstream in("x\nX\n");
  try {
    (void) monoidlab::io::read_words(in);
    FAIL();
  } catch (std::invalid_argument const& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ReadLattice, ElementsAndEdges) {
  std::istringstream in("0 a b c 1\n0 < a\na < b\nb < 1\n0 < c\nc < 1\n");
  auto const         l = monoidlab::io::read_lattice(in);
  EXPECT_EQ(l.size(), 5u);
  EXPECT_EQ(l.names().front(), "0");
  EXPECT_FALSE(monoidlab::lattice::is_modular_element(l, l.index("c")));
}

TEST(ReadLattice, ElementsFromEdgesOnly) {
  std::istringstream in("bot < top\n");
  auto const         l = monoidlab::io::read_lattice(in);
  EXPECT_EQ(l.names(), (std::vector<std::string>{"bot", "top"}));
  std::istringstream bad("a < b < c\n");
  EXPECT_THROW((void) monoidlab::io::read_lattice(bad), std::invalid_argument);
}

TEST(Table, RoundTrip) {
  auto const m =
      monoidlab::fmon::from_rees(monoidlab::rees::ReesMonoid::build(std::vector<Word>{Word::parse("x y")}));
  auto const         doc = monoidlab::io::table_json(m);
  std::istringstream in(doc.dump());
  auto const         back = monoidlab::io::read_table(in);
  ASSERT_EQ(back.size(), m.size());
  EXPECT_EQ(back.identity(), m.identity());
  EXPECT_TRUE(std::equal(back.table().begin(), back.table().end(), m.table().begin()));
  EXPECT_EQ(std::vector<std::string>(back.names().begin(), back.names().end()),
            std::vector<std::string>(m.names().begin(), m.names().end()));
}

TEST(Table, NestedUnderTableKey) {
  std::istringstream in(
      R"({"size": 1, "table": {"elements": ["e"], "identity": 0, "table": [[0]]}})");
  EXPECT_EQ(monoidlab::io::read_table(in).size(), 1u);
}

TEST(Table, Malformed) {
  for (char const* text : {"{", "{\"elements\": [\"e\"], \"identity\": 0}",
                           "{\"elements\": [\"e\"], \"identity\": 0, \"table\": [[0, 0]]}",
                           "{\"elements\": [\"e\"], \"identity\": 3, \"table\": [[0]]}"}) {
    std::istringstream in(text);
    EXPECT_THROW((void) monoidlab::io::read_table(in), std::invalid_argument) << text;
  }
}

TEST(Json, DerivationFieldOrderIsStable) {
  std::vector<Identity> const sigma{Identity::parse("x y x = y x x")};
  monoidlab::SearchBudget      budget;
  budget.max_word_length = 8;
  auto const result      = monoidlab::deduce(Word::parse("x y x t"), Word::parse("y x x t"), sigma,
                                        budget);
  auto const& d          = std::get<monoidlab::Derivation>(result);
  auto const  doc        = monoidlab::io::to_json(d, sigma);
  EXPECT_EQ(doc.begin().key(), "result");
  EXPECT_EQ(doc["chain"].size(), d.chain.size());
  EXPECT_EQ(doc.dump(), monoidlab::io::to_json(d, sigma).dump());
}

TEST(Json, VerdictWitness) {
  auto const m = monoidlab::rees::ReesMonoid::build(std::vector<Word>{Word::parse("x y")});
  auto const v = monoidlab::rees::satisfies(m, Identity::parse("x y = y x"));
  auto const doc = monoidlab::io::to_json(v);
  EXPECT_EQ(doc["outcome"], "fails");
  EXPECT_TRUE(doc.contains("witness"));
}
