#include <gtest/gtest.h>

#include "properties.hpp"
#include "reveng/word.hpp"
#include "reveng/word_syntax.hpp"

using namespace reveng;

namespace {

Alphabet abc() {
  Alphabet a;
  a.add("a");
  a.add("b");
  a.add("c");
  return a;
}

}  // namespace

TEST(Word, ReducesEagerly) {
  Word w{gen(0), gen(1), inv(1), gen(2)};
  EXPECT_EQ(w, (Word{gen(0), gen(2)}));
  EXPECT_TRUE((Word{gen(0), inv(0)}).empty());
  EXPECT_EQ(free_reduce(std::vector<Letter>{gen(0), gen(1), inv(1), inv(0)}), Word{});
}

TEST(Word, InverseAndPower) {
  Word w{gen(0), inv(1)};
  EXPECT_EQ(w.inverse(), (Word{gen(1), inv(0)}));
  EXPECT_EQ(w.pow(0), Word{});
  EXPECT_EQ(w.pow(2), (Word{gen(0), inv(1), gen(0), inv(1)}));
  EXPECT_EQ(w.pow(-1), w.inverse());
  EXPECT_EQ(Word::generator(2).pow(-3).exponent_sum(2), -3);
}

TEST(Word, CommutatorConvention) {
  auto x = Word::generator(0), y = Word::generator(1);
  EXPECT_EQ(commutator(x, y), (Word{gen(0), gen(1), inv(0), inv(1)}));
  EXPECT_TRUE(commutator(x, x).empty());
}

TEST(Word, CyclicReduceAndRotate) {
  Word w{gen(1), gen(0), gen(2), inv(1)};
  EXPECT_EQ(cyclic_reduce(w), (Word{gen(0), gen(2)}));
  EXPECT_EQ(rotate(Word{gen(0), gen(1), gen(2)}, 1), (Word{gen(1), gen(2), gen(0)}));
}

TEST(Word, SubstituteByHand) {
  // a b a^-1 with b -> a^-1 c a: a a^-1 c a a^-1 = c
  Word w{gen(0), gen(1), inv(0)};
  Word r{inv(0), gen(2), gen(0)};
  EXPECT_EQ(substitute(w, 1, r), Word::generator(2));
  EXPECT_THROW(substitute(w, 1, Word{gen(1), gen(0)}), InvalidArgument);
}

TEST(Word, ShortlexOrder) {
  EXPECT_LT(Word::generator(5), (Word{gen(0), gen(0)}));
  EXPECT_LT(Word::generator(0), Word::generator(1));
}

TEST(Alphabet, RejectsDuplicatesAndForeignWords) {
  Alphabet a = abc();
  EXPECT_THROW(a.add("a"), InvalidArgument);
  EXPECT_THROW(a.add(""), InvalidArgument);
  EXPECT_EQ(a.find("c"), GenId{2});
  EXPECT_FALSE(a.find("z"));
  EXPECT_THROW(a.require(Word::generator(7), "word"), AlphabetMismatch);
  Presentation p{a};
  EXPECT_THROW(p.add_relator(Word::generator(3)), AlphabetMismatch);
}

TEST(Alphabet, Printing) {
  Alphabet a = abc();
  EXPECT_EQ(to_string(Word{}, a), "1");
  EXPECT_EQ(to_string(Word{gen(0), inv(1), gen(2), gen(2), gen(2)}, a), "a b^-1 c^3");
}

TEST(WordSyntax, ParsesAtomsPowersAndCommutators) {
  Alphabet a = abc();
  EXPECT_EQ(parse_word("a b^-1", a), (Word{gen(0), inv(1)}));
  EXPECT_EQ(parse_word("(a b)^2", a), (Word{gen(0), gen(1), gen(0), gen(1)}));
  EXPECT_EQ(parse_word("[a, b]", a), commutator(Word::generator(0), Word::generator(1)));
  EXPECT_EQ(parse_word("[a^-1,b]^(-2)", a), commutator(Word::generator(0).inverse(), Word::generator(1)).pow(-2));
  EXPECT_EQ(parse_word("1", a), Word{});
  EXPECT_EQ(parse_word("a*b.c", a), (Word{gen(0), gen(1), gen(2)}));
}

TEST(WordSyntax, RelatorWithEquals) {
  Alphabet a = abc();
  EXPECT_EQ(parse_relator("a = [b, c]", a), Word::generator(0) * commutator(Word::generator(1), Word::generator(2)).inverse());
}

TEST(WordSyntax, DiagnosticsCarryPosition) {
  Alphabet a = abc();
  try {
    parse_word("a zz", a, 4, 10);
    FAIL() << "expected a syntax error";
  } catch (SyntaxError const& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 12u);
    EXPECT_NE(e.message().find("unresolved generator 'zz'"), std::string::npos);
  }
  EXPECT_THROW(parse_word("(a b", a), SyntaxError);
  EXPECT_THROW(parse_word("[a b]", a), SyntaxError);
  EXPECT_THROW(parse_word("a^", a), SyntaxError);
  EXPECT_THROW(parse_word("a^99999999", a), SyntaxError);
  EXPECT_THROW(parse_word("", a), SyntaxError);
}

TEST(WordProperty, FreeReduceIdempotenceAndCancellation) {
  auto const c = props::free_reduce_laws();
  EXPECT_TRUE(c.ok) << c.detail;
  EXPECT_EQ(c.samples, 10'000u);
}
