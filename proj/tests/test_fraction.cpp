#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ratknot/fraction.hpp"
#include "ratknot/invariants.hpp"

using namespace ratknot;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

ExtendedRational reversed_value(const std::vector<Integer>& w) {
  return eval_cf(std::vector<Integer>(w.rbegin(), w.rend()));
}

// Every even word of length 2 or 4 with |entries| <= bound, keyed by the
// up-to-mirror class of its reversed fraction (links and unknots skipped).
std::map<SchubertPair, std::set<std::vector<Integer>>> short_even_words(int bound, long max_p) {
  std::map<SchubertPair, std::set<std::vector<Integer>>> out;
  std::vector<int> vals;
  for (int a = -bound; a <= bound; a += 2)
    if (a) vals.push_back(a);
  auto record = [&](const std::vector<int>& w) {
    long num = 1, den = 0;
    for (int a : w) {
      long next = a * num + den;
      den = num;
      num = next;
    }
    if (num < 0) num = -num, den = -den;
    if (num < 3 || num > max_p || num % 2 == 0) return;
    auto k = classify(num, den);
    out[k.canonical].insert(std::vector<Integer>(w.begin(), w.end()));
  };
  for (int a : vals)
    for (int b : vals) {
      record({a, b});
      for (int c : vals)
        for (int d : vals) record({a, b, c, d});
    }
  return out;
}

}  // namespace

TEST(EvalCf, Examples) {
  EXPECT_EQ(eval_cf(ints({2, 2})), ExtendedRational(5, 2));
  EXPECT_EQ(eval_cf(ints({2, 0, 3})), ExtendedRational(5));
  EXPECT_EQ(eval_cf(ints({1, 1, 1})), ExtendedRational(3, 2));
  EXPECT_TRUE(eval_cf({}).is_infinite());
  EXPECT_EQ(eval_cf(ints({0})), ExtendedRational(0));
  EXPECT_TRUE(eval_cf(ints({2, 0})).is_infinite());
}

TEST(EvalCf, MatchesStepwiseExtendedArithmetic) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-6, 6), len(0, 8);
  for (int t = 0; t < 20000; ++t) {
    std::vector<Integer> w(static_cast<std::size_t>(len(rng)));
    for (auto& e : w) e = d(rng);
    ExtendedRational v = ExtendedRational::infinity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = v.reciprocal().plus(*it);
    ASSERT_EQ(eval_cf(w), v);
  }
}

TEST(CollapseZeros, Examples) {
  EXPECT_EQ(collapse_zeros(ints({4, 0, 2})).entries(), ints({6}));
  EXPECT_EQ(collapse_zeros(ints({2, 2})).entries(), ints({2, 2}));
  // The trailing zero is a reciprocal and survives.
  EXPECT_EQ(collapse_zeros(ints({2, -2, 0, 2})).entries(), ints({2, 0}));
  EXPECT_EQ(collapse_zeros(ints({0, 3, 5})).entries(), ints({5}));
}

TEST(CollapseZeros, PreservesReversedValue) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6), len(0, 10);
  for (int t = 0; t < 100000; ++t) {
    std::vector<Integer> w(static_cast<std::size_t>(len(rng)));
    for (auto& e : w) e = d(rng);
    auto c = collapse_zeros(w);
    ASSERT_EQ(c.fraction(), reversed_value(w)) << ConwayWord(w, WordForm::Mixed).size();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) ASSERT_NE(c[i], 0);
  }
}

TEST(EvenToPositive, Examples) {
  EXPECT_EQ(even_to_positive(ConwayWord::even(ints({2, -2}))).entries(), ints({1, 1, 1}));
  auto fig8 = even_to_positive(ConwayWord::even(ints({2, 2})));
  EXPECT_EQ(fig8.entries(), ints({2, 2}));
  auto torus = even_to_positive(ConwayWord::even(ints({2, -2, 2, -2})));
  Integer sum = 0;
  for (auto& e : torus.entries()) sum += e;
  EXPECT_EQ(sum, 5);
  EXPECT_EQ(abs(torus.fraction().numerator()), 5);
  EXPECT_THROW(even_to_positive(ConwayWord::even({})), DomainError);
}

TEST(PositiveToEven, Examples) {
  EXPECT_EQ(positive_to_even(SchubertPair::make(5, 2)).entries(), ints({2, 2}));
  EXPECT_EQ(positive_to_even(SchubertPair::make(3, 2)).entries(), ints({2, -2}));
  EXPECT_EQ(positive_to_even(SchubertPair::make(9, 2)).entries(), ints({2, 4}));
  EXPECT_THROW(positive_to_even(SchubertPair{1, 0}), DomainError);
  EXPECT_THROW(positive_to_even(SchubertPair{9, 3}), DomainError);
}

TEST(PositiveToEven, AgreesWithExhaustiveSearch) {
  const long max_p = 45;
  auto found = short_even_words(static_cast<int>(max_p) + 1, max_p);
  for (long p = 3; p <= max_p; p += 2) {
    for (long q = 2; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      auto pair = equivalents(SchubertPair::make(p, q), true).front();
      auto mine = positive_to_even(pair);
      auto it = found.find(pair);
      if (mine.size() > 4) {
        ASSERT_TRUE(it == found.end()) << p << "/" << q;
        continue;
      }
      ASSERT_TRUE(it != found.end()) << p << "/" << q;
      std::set<std::vector<Integer>> canon;
      for (auto& w : it->second) canon.insert(canonical_word(ConwayWord::even(w)).entries());
      ASSERT_EQ(canon.size(), 1u) << p << "/" << q;
      ASSERT_EQ(*canon.begin(), mine.entries()) << p << "/" << q;
    }
  }
}

TEST(PositiveToEven, RoundTripUpTo2000) {
  for (long p = 3; p <= 2000; p += 2) {
    for (long q = 2; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      auto pair = SchubertPair::make(p, q);
      auto w = positive_to_even(pair);
      auto v = w.fraction();
      ASSERT_EQ(abs(v.numerator()), p);
      Integer e = even_representative(v.denominator() * sgn(v.numerator()), p);
      if (e < 0) e = even_representative(-e, p);
      auto eq = equivalents(pair, true);
      ASSERT_TRUE(std::find(eq.begin(), eq.end(), SchubertPair{p, e}) != eq.end()) << p << "/" << q;
      // Positive form crosses back with the same crossing number.
      auto pos = even_to_positive(w);
      Integer sum = 0;
      for (auto& c : pos.entries()) sum += c;
      ASSERT_EQ(sum, crossing_number(w));
      auto pv = pos.fraction();
      ASSERT_EQ(abs(pv.numerator()), p);
    }
  }
}

TEST(OrientedWord, InverseGivesSameKnotAndNegationGivesMirror) {
  for (long p = 3; p <= 301; p += 2) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto w = oriented_even_word(p, q);
      Integer inv = mod_inverse(q, p);
      ASSERT_EQ(oriented_even_word(p, inv), w) << p << "/" << q;
      auto mirror = oriented_even_word(p, -q);
      auto neg = w.negated();
      auto neg_alt = neg.reversed().negated();
      ASSERT_TRUE(mirror == neg || mirror == neg_alt) << p << "/" << q;
      // Signature is an oriented invariant.
      ASSERT_EQ(signature(w), -signature(mirror));
    }
  }
}

TEST(Equivalents, Examples) {
  auto e = equivalents(SchubertPair::make(9, 2), false);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], SchubertPair::make(9, 2));
  auto m = equivalents(SchubertPair::make(9, 2), true);
  std::vector<SchubertPair> want = {SchubertPair::make(9, 2), SchubertPair::make(9, 4)};
  EXPECT_EQ(m, want);
  auto f8 = equivalents(SchubertPair::make(5, 2), true);
  ASSERT_EQ(f8.size(), 1u);
  EXPECT_EQ(f8[0], SchubertPair::make(5, 2));
  auto unknot = equivalents(SchubertPair::make(1, 0), true);
  ASSERT_EQ(unknot.size(), 1u);
}

TEST(CanonicalWord, ExamplesAndOrbitInvariance) {
  EXPECT_EQ(canonical_word(ConwayWord::even(ints({-2, 2}))).entries(), ints({2, -2}));
  EXPECT_EQ(canonical_word(ConwayWord::even(ints({2, 4}))).entries(), ints({2, 4}));
  EXPECT_EQ(canonical_word(ConwayWord::even(ints({4, 2}))).entries(), ints({2, 4}));
  EXPECT_EQ(canonical_word(ConwayWord::even(ints({2, 2}))).entries(), ints({2, 2}));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(1, 4), sign(0, 1), len(1, 4);
  for (int t = 0; t < 2000; ++t) {
    std::vector<Integer> w(2 * static_cast<std::size_t>(len(rng)));
    for (auto& e : w) e = 2 * d(rng) * (sign(rng) ? 1 : -1);
    auto word = ConwayWord::even(w);
    auto c = canonical_word(word);
    ASSERT_EQ(canonical_word(c), c);
    for (auto& o : {word.reversed(), word.negated(), word.reversed().negated()})
      ASSERT_EQ(canonical_word(o), c);
  }
}

TEST(Classify, MirrorBitAndAchirality) {
  auto t = classify(3, 2);
  auto tm = classify(3, -2);
  EXPECT_EQ(t.canonical, SchubertPair::make(3, 2));
  EXPECT_EQ(tm.canonical, SchubertPair::make(3, 2));
  EXPECT_NE(t.mirrored, tm.mirrored);
  EXPECT_FALSE(t.achiral);
  auto f8 = classify(5, 2);
  EXPECT_TRUE(f8.achiral);
  EXPECT_FALSE(f8.mirrored);
  EXPECT_EQ(f8.even_word.entries(), ints({2, 2}));
  // S(9,4) is the mirror of S(9,2).
  EXPECT_EQ(classify(9, 4).canonical, SchubertPair::make(9, 2));
  EXPECT_TRUE(classify(9, 4).mirrored);
  EXPECT_THROW(classify(4, 1), DomainError);
  EXPECT_THROW(classify(1, 0), DomainError);
}

TEST(Parse, FractionAndEntries) {
  auto [p, q] = parse_fraction("5/2");
  EXPECT_EQ(p, 5);
  EXPECT_EQ(q, 2);
  EXPECT_EQ(parse_entries("2,-2, 2,-2"), ints({2, -2, 2, -2}));
  EXPECT_THROW(parse_fraction("5"), ParseError);
  EXPECT_THROW(parse_entries("2,x"), ParseError);
}
