#include <doctest.h>

#include <random>

#include "lamina/generate.hpp"

#include "oracles.hpp"

using namespace lamina;

namespace {

const Alphabet kRank2(2);

Word w2(const std::string& s) { return parse_word(kRank2, s); }

Endomorphism fib_rules() {
  return Endomorphism(kRank2, {w2("ab"), w2("a")});
}

std::set<std::string> strings(const FactorLanguage& language) {
  return oracle::words_in(language);
}

Word random_reduced(std::mt19937_64& rng, int min_len, int max_len) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 3);
  const int len = len_dist(rng);
  std::vector<Letter> out;
  while (static_cast<int>(out.size()) < len) {
    const Letter x = static_cast<Letter>(letter_dist(rng));
    if (!out.empty() && x == inverse_letter(out.back())) continue;
    out.push_back(x);
  }
  return Word::from_letters(std::move(out));
}

}  // namespace

TEST_CASE("rational languages from the cyclic core") {
  CHECK(strings(rational(kRank2, w2("a"), 3)) ==
        std::set<std::string>{"a", "aa", "aaa", "A", "AA", "AAA"});
  CHECK(strings(rational(kRank2, w2("ab"), 2)) ==
        std::set<std::string>{"a", "b", "ab", "ba", "A", "B", "BA", "AB"});
  CHECK(same_words(rational(kRank2, w2("baB"), 3), rational(kRank2, w2("a"), 3)));
  CHECK(rational(kRank2, w2("ab"), 5).exact());
  CHECK_THROWS_AS(rational(kRank2, Word(), 3), invalid_input);

  for (const std::string s : {"ab", "aab", "abAB", "aabab"})
    CHECK(strings(rational(kRank2, w2(s), 7)) == oracle::periodic_factors(s, 7));
}

TEST_CASE("rational languages depend only on the conjugacy class") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_reduced(rng, 1, 5);
    const Word g = random_reduced(rng, 0, 4);
    const FactorLanguage base = rational(kRank2, w, 6);
    CHECK(same_words(base, rational(kRank2, w.inverse(), 6)));
    const Word conjugate =
        concat(concat(g, w).word, g.inverse()).word;
    if (!conjugate.empty())
      CHECK(same_words(base, rational(kRank2, conjugate, 6)));
    const Word square = concat(w, w).word;
    CHECK(same_words(base, rational(kRank2, square, 6)));
  }
}

TEST_CASE("biinfinite words index from the separator") {
  const BiinfiniteWord ends(w2("a"), Word(), w2("b"));
  CHECK(to_string(ends.central_word(0)) == "a");
  CHECK(to_string(ends.central_word(1)) == "aab");
  CHECK(to_string(ends.central_word(2)) == "aaabb");

  const BiinfiniteWord periodic(w2("ab"), Word(), w2("ab"));
  CHECK(to_string(periodic.central_word(0)) == "b");
  CHECK(to_string(periodic.central_word(1)) == "aba");
  CHECK(to_string(periodic.window(1, 4)) == "abab");

  const BiinfiniteWord centered(w2("a"), w2("ba"), w2("b"));
  CHECK(to_string(centered.window(1, 2)) == "ba");
  CHECK(to_string(centered.window(-1, 3)) == "aabab");

  CHECK_THROWS_AS(BiinfiniteWord(w2("a"), Word(), w2("A")), invalid_input);
  CHECK_THROWS_AS(BiinfiniteWord(w2("a"), w2("Ab"), w2("b")), invalid_input);

  // periods are stored primitive
  CHECK(to_string(BiinfiniteWord(w2("aa"), Word(), w2("bb")).left_period()) ==
        "a");
}

TEST_CASE("language of one eventually periodic leaf") {
  const BiinfiniteWord ends(w2("a"), Word(), w2("b"));
  const FactorLanguage language = from_ends(kRank2, ends, 3);
  CHECK(strings(language) ==
        std::set<std::string>{"a", "b", "A", "B", "aa", "ab", "bb", "AA", "BA",
                              "BB", "aaa", "aab", "abb", "bbb", "AAA", "BAA",
                              "BBA", "BBB"});
  CHECK(language.exact());

  // a periodic leaf generates the rational language
  const BiinfiniteWord periodic(w2("ab"), Word(), w2("ab"));
  for (int n : {2, 5})
    CHECK(same_words(from_ends(kRank2, periodic, n), rational(kRank2, w2("ab"), n)));

  // the two periodic sublanguages sit strictly inside
  const FactorLanguage la = rational(kRank2, w2("a"), 3);
  bool contains_all = true;
  la.for_each_word([&](const Word& w) {
    contains_all = contains_all && language.contains(w);
  });
  CHECK(contains_all);
  CHECK(language.word_count() > la.word_count());
  CHECK_FALSE(gap_bound(language, 1).has_value());
}

TEST_CASE("window factors match the generated language (shift invariance)") {
  const BiinfiniteWord leaf(w2("ab"), w2("bba"), w2("ba"));
  const int n = 4;
  const FactorLanguage generated = from_ends(kRank2, leaf, n);
  LanguageBuilder builder(kRank2, n);
  for (std::int64_t shift = -9; shift <= 9; ++shift)
    builder.add(leaf.window(shift - n, shift + n));
  const FactorLanguage windows = std::move(builder).build(false);
  CHECK(strings(windows) == strings(generated));
}

TEST_CASE("substitution fixed words") {
  const FactorLanguage fib1 = from_substitution(fib_rules(), 0, 1);
  CHECK(strings(fib1) == std::set<std::string>{"a", "b", "A", "B"});

  // oracle: direct factor scan of a deep iterate
  const std::string deep =
      oracle::substitute({{'a', "ab"}, {'b', "a"}}, "a", 12);
  for (int n : {3, 6, 9}) {
    const FactorLanguage fib = from_substitution(fib_rules(), 0, n);
    CHECK(strings(fib) == oracle::symmetric_factors(deep, n));
    CHECK(fib.exact());
  }

  // Sturmian complexity: exactly k+1 positive words of each length k
  const FactorLanguage fib = from_substitution(fib_rules(), 0, 8);
  for (int k = 1; k <= 8; ++k)
    CHECK(fib.words_of_length(k).size() == 2 * (k + 1));

  const Endomorphism other(kRank2, {w2("aba"), w2("ab")});
  const std::string other_deep =
      oracle::substitute({{'a', "aba"}, {'b', "ab"}}, "a", 8);
  CHECK(strings(from_substitution(other, 0, 2)) ==
        oracle::symmetric_factors(other_deep, 2));

  CHECK_THROWS_AS(from_substitution(Endomorphism(kRank2, {w2("ba"), w2("a")}),
                                    0, 3),
                  invalid_input);  // not prolongable at a
  CHECK_THROWS_AS(from_substitution(Endomorphism(kRank2, {w2("aB"), w2("a")}),
                                    0, 3),
                  invalid_input);  // not positive
  CHECK_THROWS_AS(from_substitution(Endomorphism(kRank2, {w2("a"), w2("b")}),
                                    0, 3),
                  invalid_input);  // no growth
}

TEST_CASE("two ends combine into a biinfinite word") {
  const BoundaryPoint a_inf = infinity_word(w2("a"), Sign::plus);
  const BoundaryPoint b_inf = infinity_word(w2("b"), Sign::plus);
  const BiinfiniteWord z = rho(a_inf, b_inf);
  CHECK(to_string(z.left_period()) == "A");
  CHECK(z.center().empty());
  CHECK(to_string(z.right_period()) == "b");

  const BiinfiniteWord stripped = rho(BoundaryPoint(w2("a"), w2("b")), a_inf);
  CHECK(to_string(stripped.left_period()) == "B");
  CHECK(to_string(stripped.right_period()) == "a");
  CHECK(stripped.center().empty());

  const BiinfiniteWord leaf =
      rho(infinity_word(w2("ab"), Sign::minus), infinity_word(w2("ab"), Sign::plus));
  for (int n : {2, 4})
    CHECK(same_words(from_ends(kRank2, leaf, n), rational(kRank2, w2("ab"), n)));

  CHECK_THROWS_AS(rho(a_inf, a_inf), invalid_input);
}

TEST_CASE("swapping the ends inverts the leaf (flip invariance)") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Word u = random_reduced(rng, 1, 4);
    const Word v = random_reduced(rng, 1, 4);
    const BoundaryPoint x = infinity_word(u, Sign::plus);
    const BoundaryPoint y = infinity_word(v, Sign::plus);
    if (x == y) continue;
    const BiinfiniteWord forward = rho(x, y);
    const BiinfiniteWord backward = rho(y, x);
    CHECK(backward == forward.inverted());
    for (int n : {3})
      CHECK(same_words(from_ends(kRank2, forward, n),
                       from_ends(kRank2, backward, n)));
  }
}

TEST_CASE("rational approximants certify against their source") {
  const FactorLanguage fib = from_substitution(fib_rules(), 0, 24);
  const CyclicWord v2 = rational_approximant(fib, 2);
  CHECK(equal_at(rational(kRank2, v2.representative(), 2), truncate(fib, 2), 2));

  const FactorLanguage lab = rational(kRank2, w2("ab"), 9);
  const CyclicWord vab = rational_approximant(lab, 2);
  CHECK(equal_at(rational(kRank2, vab.representative(), 2), truncate(lab, 2), 2));
  CHECK(CyclicWord(primitive_root(vab.representative())) ==
        CyclicWord(w2("ab")));

  const FactorLanguage la = rational(kRank2, w2("a"), 6);
  const CyclicWord va = rational_approximant(la, 1);
  CHECK(to_string(primitive_root(va.representative())) == "a");

  // gap bound never witnessed: the two-ended language
  CHECK_THROWS_AS(
      rational_approximant(
          from_ends(kRank2, BiinfiniteWord(w2("a"), Word(), w2("b")), 9), 1),
      horizon_error);
  // witnessed gap bound but not enough room for three blocks
  CHECK_THROWS_AS(rational_approximant(rational(kRank2, w2("ab"), 5), 2),
                  horizon_error);
}
