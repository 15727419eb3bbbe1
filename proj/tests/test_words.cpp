#include <gtest/gtest.h>

#include "hcyl/errors.hpp"
#include "hcyl/words.hpp"
#include "oracles.hpp"

using namespace hcyl;

namespace {

const GeneratorTable kPres = GeneratorTable::presentation(4, 1);
const GeneratorTable kFree = GeneratorTable::free(4);

Word g(int i, int e = 1) { return Word::generator(kFree, {GenKind::Plain, i}, e); }

}  // namespace

TEST(Words, CommutatorBracket) {
  const Word w = parse_word("[ip1,ip3]", kPres);
  const auto ip = [](int i, int e) { return Word::generator(kPres, {GenKind::IPlus, i}, e); };
  EXPECT_EQ(w, ip(1, 1) * ip(3, 1) * ip(1, -1) * ip(3, -1));
  EXPECT_EQ(w.size(), 4u);
}

TEST(Words, FreeReductionOnParse) {
  EXPECT_TRUE(parse_word("g1 g1^-1", kFree).empty());
  EXPECT_TRUE(parse_word("g2 (g1 g3)^2 g3^-1 g1^-1 g3^-1 g1^-1 g2^-1", kFree).empty());
}

TEST(Words, FirstRelatorOfExample) {
  const Word w = parse_word("ip1 im3^-1 ip4 im1^-1", kPres);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w.letters()[1].gen, (Generator{GenKind::IMinus, 3}));
  EXPECT_EQ(w.letters()[1].exp, -1);
}

TEST(Words, GrammarVariants) {
  EXPECT_EQ(parse_word("g1*g2*g1", kFree), parse_word("g1 g2 g1", kFree));
  EXPECT_EQ(parse_word("g1^3", kFree), g(1) * g(1) * g(1));
  EXPECT_EQ(parse_word("g1^-2", kFree), g(1, -1) * g(1, -1));
  EXPECT_EQ(parse_word("[g1,g2]^-1", kFree), parse_word("g2 g1 g2^-1 g1^-1", kFree));
  EXPECT_TRUE(parse_word("1", kFree).empty());
  EXPECT_TRUE(parse_word("g1^0", kFree).empty());
}

TEST(Words, ParseErrorsCarryColumns) {
  try {
    parse_word("g1 g9", kFree);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW(parse_word("", kFree), ParseError);
  EXPECT_THROW(parse_word("g1^", kFree), ParseError);
  EXPECT_THROW(parse_word("[g1 g2]", kFree), ParseError);
  EXPECT_THROW(parse_word("(g1", kFree), ParseError);
  EXPECT_THROW(parse_word("ip1", kFree), ParseError);
  EXPECT_THROW(parse_word("z2", kPres), ParseError);
}

TEST(Words, GroupLaws) {
  oracle::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Word a = oracle::random_word(rng, kFree, 12), b = oracle::random_word(rng, kFree, 12),
               c = oracle::random_word(rng, kFree, 12);
    EXPECT_TRUE((a * a.inverse()).empty());
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
  }
  EXPECT_TRUE(Word(kFree).inverse().empty());
  EXPECT_EQ((g(1) * g(2)).to_string(), "g1 g2");
}

TEST(Words, ReductionIsConfluent) {
  oracle::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const Word w = oracle::random_word(rng, kFree, 10);
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    for (int k = 0; k < 4; ++k) {
      const auto pos = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(letters.size())));
      const Letter l{kFree.at(static_cast<std::size_t>(rng.uniform(0, 3))), rng.coin() ? 1 : -1};
      letters.insert(letters.begin() + static_cast<long>(pos), {l, {l.gen, -l.exp}});
    }
    EXPECT_EQ(Word(kFree, letters), w);
  }
}

TEST(Words, SerializeRoundTrip) {
  oracle::Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const Word w = oracle::random_word(rng, kPres, 15);
    EXPECT_EQ(parse_word(w.to_string(), kPres), w);
  }
}

TEST(Words, BoundaryWord) {
  EXPECT_EQ(boundary_word(1), parse_word("[g1,g2]", GeneratorTable::free(2)));
  EXPECT_EQ(boundary_word(2), parse_word("[g1,g3][g2,g4]", GeneratorTable::free(4)));
  EXPECT_EQ(boundary_word(3).size(), 12u);
  const auto v = abelianize(boundary_word(3), GeneratorTable::free(6));
  EXPECT_TRUE(std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }));
  EXPECT_THROW(boundary_word(0), std::invalid_argument);
}

TEST(Words, Abelianize) {
  EXPECT_EQ(abelianize(parse_word("g1 g2 g1", kFree), kFree), (std::vector<long>{2, 1, 0, 0}));
  // im1..im4, z1, ip1..ip4: ip4 cancels, im3 +1, z -1.
  EXPECT_EQ(abelianize(parse_word("ip4 im3 ip4^-1 z1^-1", kPres), kPres),
            (std::vector<long>{0, 0, 1, 0, -1, 0, 0, 0, 0}));
  oracle::Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const Word a = oracle::random_word(rng, kFree, 10), b = oracle::random_word(rng, kFree, 10);
    auto va = abelianize(a, kFree), vb = abelianize(b, kFree), vab = abelianize(a * b, kFree),
         vinv = abelianize(a.inverse(), kFree);
    for (std::size_t i = 0; i < va.size(); ++i) {
      EXPECT_EQ(vab[i], va[i] + vb[i]);
      EXPECT_EQ(vinv[i], -va[i]);
    }
  }
}

TEST(Words, ContextsDoNotMix) {
  const Word a = g(1);
  const Word b = Word::generator(GeneratorTable::free(3), {GenKind::Plain, 1});
  EXPECT_THROW(a * b, ContextMismatch);
  EXPECT_EQ(Word() * a, a);
}
