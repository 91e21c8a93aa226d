#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "growthlab/monomial.hpp"
#include "growthlab/rotation.hpp"

using namespace growthlab;

namespace {
const Alphabet ab = Alphabet::from_chars("ab");

Presentation pres(std::initializer_list<const char*> words,
                  const Alphabet& a = ab) {
  std::vector<Word> ws;
  for (const char* w : words) ws.push_back(a.parse(w));
  return Presentation(a, std::move(ws));
}
}  // namespace

TEST_CASE("presentation canonicalization keeps the obstruction antichain") {
  Presentation p = pres({"aba", "ba", "ba"});
  CHECK(p.forbidden == std::vector<Word>{ab.parse("ba")});
  CHECK(p.removed_in_canonicalization == std::vector<Word>{ab.parse("aba")});
  CHECK_THROWS_AS(Presentation(ab, {Word{}}), ArgumentError);
}

TEST_CASE("presentation text round trip") {
  Presentation p = Presentation::parse("ab  # alphabet\nba\n\n# done\n");
  CHECK(p.alphabet == ab);
  CHECK(p.forbidden == std::vector<Word>{ab.parse("ba")});

  Presentation again = Presentation::parse(p.format());
  CHECK(again.forbidden == p.forbidden);

  CHECK_THROWS_AS(Presentation::parse("ab\nxy\n"), DataError);
  CHECK_THROWS_AS(Presentation::parse(""), DataError);
}

TEST_CASE("presentation parse with multi-character symbols") {
  Presentation p = Presentation::parse("x1 x2\nx1 x1\nx2\n");
  CHECK(p.alphabet.size() == 2);
  CHECK(p.forbidden ==
        std::vector<Word>{Word{1}, Word{0, 0}});  // length-lex order
}

TEST_CASE("factor automaton for a single obstruction") {
  FactorAutomaton fa = build_automaton(pres({"ba"}));
  CHECK(fa.n_states == 2);
  std::size_t eps = fa.initial;
  CHECK(fa.context[eps].empty());
  std::size_t qb = 1 - eps;
  CHECK(fa.delta[eps][0] == long(eps));
  CHECK(fa.delta[eps][1] == long(qb));
  CHECK(fa.delta[qb][0] == FactorAutomaton::DEAD);
  CHECK(fa.delta[qb][1] == long(qb));
  CHECK(fa.n_sccs == 2);
  CHECK(fa.in_cycle(eps));
  CHECK(fa.in_cycle(qb));
  CHECK(fa.cycle_chain_depth() == 2);
  CHECK(fa.simple_cycle_lengths() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("normal word enumeration") {
  auto w3 = normal_words(pres({"ba"}), 3);
  std::vector<Word> expect{ab.parse("aaa"), ab.parse("aab"), ab.parse("abb"),
                           ab.parse("bbb")};
  CHECK(w3 == expect);
  CHECK(normal_words(pres({"ba"}), 0) == std::vector<Word>{Word{}});
}

TEST_CASE("growth profiles: Fibonacci for the bb-avoiders") {
  auto [T, V] = growth_profiles(pres({"bb"}), 8);
  std::vector<long long> fib{1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(T.values[n] == BigInt(fib[n]));
    CHECK(T.exact[n]);
  }
  BigInt sum = 0;
  for (std::size_t n = 0; n <= 8; ++n) {
    sum += T.values[n];
    CHECK(V.values[n] == sum);
  }
}

TEST_CASE("growth classification covers all regimes") {
  CHECK(classify_growth(pres({"ba"})).tag == GrowthClass::Tag::Boundary);
  CHECK(classify_growth(pres({"ba"})).boundary_offset == 1);
  CHECK(classify_growth(pres({"ba"})).certified);
  CHECK(classify_growth(pres({"bb"})).tag == GrowthClass::Tag::Exponential);
  CHECK(classify_growth(pres({"ab", "ba"})).tag == GrowthClass::Tag::Slow);
  auto a1 = Alphabet::from_chars("a");
  CHECK(classify_growth(Presentation(a1, {a1.parse("aa")})).tag ==
        GrowthClass::Tag::FiniteDim);
  // Free algebra on one letter: a single cycle, T(n) = 1.
  CHECK(classify_growth(Presentation(a1, {})).tag == GrowthClass::Tag::Slow);
  // Free algebra on two letters is exponential.
  CHECK(classify_growth(Presentation(ab, {})).tag ==
        GrowthClass::Tag::Exponential);
}

TEST_CASE("superlinear polynomial regime") {
  // Avoiding {ba} over three letters via chained cycles a* c* with a
  // two-step corridor gives quadratic growth: a^i (bc...) patterns.
  auto abc = Alphabet::from_chars("abc");
  // Forbid everything that is not of the form a^i b^j c^k:
  Presentation p(abc, {abc.parse("ba"), abc.parse("ca"), abc.parse("cb")});
  auto cls = classify_growth(p);
  CHECK(cls.tag == GrowthClass::Tag::SuperlinearPoly);
  CHECK(cls.poly_degree == 3);
  auto [T, V] = growth_profiles(p, 12);
  for (std::size_t n = 1; n <= 12; ++n)  // T(n) = C(n+2, 2)
    CHECK(T.values[n] == BigInt((n + 1) * (n + 2) / 2));
}

TEST_CASE("good word profiles") {
  auto trl = good_word_profile(pres({"ab", "ba"}), 6);
  CHECK(trl.values[0] == 1);  // the empty word
  for (std::size_t n = 1; n <= 6; ++n) CHECK(trl.values[n] == 2);

  // For {ba} every normal word is good: T_RL = T = n + 1.
  auto trl2 = good_word_profile(pres({"ba"}), 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(trl2.values[n] == BigInt(n + 1));

  // Finite-dimensional: no live cycle, no good words.
  auto a1 = Alphabet::from_chars("a");
  auto trl3 = good_word_profile(Presentation(a1, {a1.parse("aa")}), 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(trl3.values[n] == 0);
}

TEST_CASE("T_RL is nondecreasing and bounded by T") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> words;
    std::size_t n_words = 1 + rng() % 3;
    for (std::size_t i = 0; i < n_words; ++i) {
      Word w;
      std::size_t len = 1 + rng() % 4;
      for (std::size_t j = 0; j < len; ++j) w.push_back(Sym(rng() % 2));
      words.push_back(w);
    }
    Presentation p(ab, std::move(words));
    auto trl = good_word_profile(p, 12);
    auto [T, V] = growth_profiles(p, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      CHECK(trl.values[n] <= T.values[n]);
      if (n) CHECK(trl.values[n - 1] <= trl.values[n]);
    }
  }
}

TEST_CASE("slow growth criterion") {
  CHECK(slow_growth_criterion(pres({"ab", "ba"})).has_value());
  CHECK_FALSE(slow_growth_criterion(pres({"ba"})).has_value());
  CHECK_FALSE(slow_growth_criterion(pres({"bb"})).has_value());
}

TEST_CASE("antidictionary of the alternating word") {
  Word w = repeat(ab.parse("ab"), 20);
  auto anti = antidictionary(ab, factor_data(w, 6));
  CHECK(anti.bound == 6);
  CHECK(anti.words == std::vector<Word>{ab.parse("aa"), ab.parse("bb")});
}

TEST_CASE("antidictionary rejects corrupted data") {
  Word w = repeat(ab.parse("ab"), 20);
  auto data = factor_data(w, 4);
  data[3].words.insert(ab.parse("aaa"));  // aa missing at length 2
  CHECK_THROWS_AS(antidictionary(ab, data), DataError);
  CHECK_THROWS_AS(antidictionary(ab, {}), ArgumentError);
}

TEST_CASE("duality holds on mechanical words") {
  Word w = sturmian(Angle(Rational(610, 987)), Angle(Rational(1, 11)), 400);
  auto rep = verify_duality(ab, factor_data(w, 8));
  CHECK(rep.ok);
  // The sturmian antidictionary has exactly one obstruction per length
  // scale; at least aa or bb appears early.
  CHECK(!rep.anti.words.empty());
}

TEST_CASE("DP counts equal brute force (seeded)") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Word> words;
    std::size_t n_words = 1 + rng() % 3;
    for (std::size_t i = 0; i < n_words; ++i) {
      Word w;
      std::size_t len = 1 + rng() % 4;
      for (std::size_t j = 0; j < len; ++j) w.push_back(Sym(rng() % 2));
      words.push_back(w);
    }
    Presentation p(ab, std::move(words));
    auto [T, V] = growth_profiles(p, 8);
    for (std::size_t n = 0; n <= 8; ++n)
      CHECK(T.values[n] == BigInt(normal_words(p, n).size()));
  }
}
