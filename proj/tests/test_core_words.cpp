#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "growthlab/core.hpp"

using namespace growthlab;

TEST_CASE("alphabet basics") {
  Alphabet a = Alphabet::from_chars("ab");
  CHECK(a.size() == 2);
  CHECK(a.symbol(0) == "a");
  CHECK(a.index_of("b") == Sym(1));
  CHECK_FALSE(a.index_of("c").has_value());
  CHECK(a.parse("abba") == Word{0, 1, 1, 0});
  CHECK(a.format(Word{1, 0}) == "ba");
  CHECK_THROWS_AS(a.parse("abc"), ArgumentError);
  CHECK_THROWS_AS(Alphabet::from_chars("aa"), ArgumentError);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), ArgumentError);
}

TEST_CASE("multi-character symbols with separator") {
  Alphabet a(std::vector<std::string>{"x1", "x2"});
  CHECK(a.parse("x1 x2 x1", " ") == Word{0, 1, 0});
  CHECK(a.format(Word{1, 0}, " ") == "x2 x1");
}

TEST_CASE("word helpers") {
  Alphabet a = Alphabet::from_chars("abc");
  Word w = a.parse("abc");
  CHECK(cat(a.parse("ab"), a.parse("c")) == w);
  CHECK(repeat(a.parse("ab"), 3) == a.parse("ababab"));
  CHECK(repeat(a.parse("ab"), 0).empty());
  CHECK(reversed(w) == a.parse("cba"));
  CHECK(subword(w, 1, 2) == a.parse("bc"));
  CHECK_THROWS_AS(subword(w, 2, 2), ArgumentError);
  CHECK(contains_factor(a.parse("abcabc"), a.parse("cab")));
  CHECK_FALSE(contains_factor(a.parse("abcabc"), a.parse("cc")));
  CHECK(contains_factor(w, Word{}));
  CHECK(count_symbol(a.parse("abab"), 0) == 2);
}

TEST_CASE("rotations and primitive roots") {
  Alphabet a = Alphabet::from_chars("abc");
  CHECK(rotated_left(a.parse("abc")) == a.parse("bca"));
  CHECK(rotated_right(a.parse("abc")) == a.parse("cab"));
  CHECK(rotated_left(rotated_right(a.parse("abc"))) == a.parse("abc"));
  CHECK(least_rotation(a.parse("bca")) == a.parse("abc"));
  CHECK(least_rotation(a.parse("cab")) == a.parse("abc"));
  CHECK(primitive_root(a.parse("ababab")) == a.parse("ab"));
  CHECK(primitive_root(a.parse("abcab")) == a.parse("abcab"));
  CHECK(primitive_root(a.parse("aaaa")) == a.parse("a"));
}

TEST_CASE("factor sets") {
  Alphabet a = Alphabet::from_chars("ab");
  Word w = a.parse("abaab");
  FactorSet f2 = factors(w, 2);
  CHECK(f2.size() == 3);  // ab, ba, aa
  CHECK(f2.contains(a.parse("aa")));
  CHECK_FALSE(f2.contains(a.parse("bb")));
  CHECK(factors(w, 0).contains(Word{}));
  FactorSet beyond = factors(w, 6);
  CHECK(beyond.horizon_exceeded);
  CHECK(beyond.size() == 0);
}

TEST_CASE("enumeration order") {
  Alphabet a = Alphabet::from_chars("ab");
  auto w3 = all_words(a, 3);
  CHECK(w3.size() == 8);
  CHECK(w3.front() == a.parse("aaa"));
  CHECK(w3.back() == a.parse("bbb"));
  auto upto = words_up_to(a, 2);
  CHECK(upto.size() == 1 + 2 + 4);
  CHECK(upto[0].empty());
  CHECK(upto.back() == a.parse("bb"));
}

TEST_CASE("prefix-of-power and conjugacy shape") {
  Alphabet a = Alphabet::from_chars("ab");
  CHECK(is_prefix_of_power(a.parse("ababa"), a.parse("ab")));
  CHECK_FALSE(is_prefix_of_power(a.parse("abaab"), a.parse("ab")));
  CHECK(is_prefix_of_power(Word{}, a.parse("ab")));
  CHECK_THROWS_AS(is_prefix_of_power(a.parse("a"), Word{}), ArgumentError);

  auto t = check_conjugacy_shape(a.parse("ab"), a.parse("ababa"));
  REQUIRE(t.has_value());
  CHECK(*t == a.parse("ba"));
  CHECK_FALSE(check_conjugacy_shape(a.parse("ab"), a.parse("abb")).has_value());
}

TEST_CASE("conjugacy shape agrees with prefix-of-power (seeded)") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t slen = 1 + rng() % 5, wlen = rng() % 12;
    Word s, w;
    for (std::size_t i = 0; i < slen; ++i) s.push_back(Sym(rng() % 2));
    for (std::size_t i = 0; i < wlen; ++i) w.push_back(Sym(rng() % 2));
    auto t = check_conjugacy_shape(s, w);
    CHECK(t.has_value() == is_prefix_of_power(w, s));
    if (t) CHECK(cat(s, w) == cat(w, *t));  // the defining equation S.W = W.T
  }
}
