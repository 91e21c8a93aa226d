#pragma once

// The acceptance suite: one deterministic, seeded check per headline
// property, shared by the test harness and the `selftest` subcommand.

#include <random>

#include "classifier.hpp"

namespace growthlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace selftest_detail {

/// Continued-fraction convergent p/q of [0; a1, a2, ...] with partial
/// quotients in [1, 3], extended until q >= 900.
inline Rational random_convergent(std::mt19937_64& rng, bool golden) {
  BigInt h1 = 0, h0 = 1, k1 = 1, k0 = 0;  // h/k after each quotient
  while (k1 < 900) {
    std::uint64_t a = golden ? 1 : 1 + rng() % 3;
    BigInt h = BigInt(a) * h1 + h0;
    BigInt k = BigInt(a) * k1 + k0;
    h0 = h1;
    k0 = k1;
    h1 = h;
    k1 = k;
  }
  return Rational(h1, k1);
}

/// x0 = t/p for a prime p not dividing den(alpha): the orbit denominator
/// then always keeps the factor p, so no orbit point can hit a partition
/// endpoint (whose denominator divides den(alpha)).
inline Rational safe_x0(std::mt19937_64& rng, const Rational& alpha) {
  static const long long primes[] = {1009, 1013, 1019, 1021, 1031, 1033};
  for (long long p : primes) {
    if (denominator(alpha) % p == 0) continue;
    long long t = 1 + static_cast<long long>(rng() % (p - 1));
    return Rational(t, p);
  }
  throw InternalError("no safe x0 denominator found");
}

inline Presentation random_presentation(std::mt19937_64& rng) {
  std::size_t letters = 2 + rng() % 2;
  Alphabet a = Alphabet::from_chars(letters == 2 ? "ab" : "abc");
  std::size_t n_words = 1 + rng() % 3;
  std::vector<Word> words;
  for (std::size_t i = 0; i < n_words; ++i) {
    std::size_t len = 1 + rng() % 4;
    Word w;
    for (std::size_t j = 0; j < len; ++j)
      w.push_back(static_cast<Sym>(rng() % letters));
    words.push_back(w);
  }
  return Presentation(a, std::move(words));
}

inline std::size_t brute_force_count(const Presentation& p, std::size_t n) {
  std::size_t count = 0;
  for (const Word& w : all_words(p.alphabet, n)) {
    bool ok = true;
    for (const auto& f : p.forbidden)
      if (contains_factor(w, f)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

}  // namespace selftest_detail

inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0) {
  namespace sd = selftest_detail;
  std::vector<CriterionResult> out;
  auto push = [&](int id, std::string name, bool pass, std::string detail) {
    out.push_back({id, std::move(name), pass, std::move(detail)});
  };

  // Shared material: 20 seeded Sturmian codings.
  std::vector<Word> sturmian_words;
  {
    std::mt19937_64 rng(seed * 1000003 + 1);
    for (int i = 0; i < 20; ++i) {
      Rational alpha = sd::random_convergent(rng, i < 4);
      Rational x0 = sd::safe_x0(rng, alpha);
      sturmian_words.push_back(sturmian(Angle(alpha), Angle(x0), 800));
    }
  }

  // 1. Sturmian complexity: T(n) = n + 1 for 1 <= n <= 40.
  {
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < sturmian_words.size() && pass; ++i) {
      auto prof = complexity_profile(sturmian_words[i], 40);
      for (std::size_t n = 1; n <= 40; ++n)
        if (!prof.exact[n] || prof.values[n] != BigInt(n + 1)) {
          pass = false;
          detail = "word " + std::to_string(i) + " fails at n = " +
                   std::to_string(n);
          break;
        }
    }
    push(1, "sturmian complexity T(n) = n+1", pass,
         pass ? "20 codings, n <= 40 exact" : detail);
  }

  // 2. Balance / complexity equivalence cross-check.
  {
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < sturmian_words.size() && pass; ++i)
      if (balance_check(sturmian_words[i], 40).max_discrepancy != 1) {
        pass = false;
        detail = "sturmian word " + std::to_string(i) + " not 1-balanced";
      }
    std::mt19937_64 rng(seed * 1000003 + 2);
    for (int i = 0; i < 20 && pass; ++i) {
      Word w;
      for (int j = 0; j < 200; ++j) w.push_back(static_cast<Sym>(rng() % 2));
      bool unbalanced = balance_check(w, 40).max_discrepancy >= 2;
      bool tail_n1 = true;
      auto prof = complexity_profile(w, 40);
      for (std::size_t n = 1; n <= 40; ++n)
        if (prof.values[n] != BigInt(n + 1)) {
          tail_n1 = false;
          break;
        }
      if (!unbalanced && tail_n1) {
        pass = false;
        detail = "random word " + std::to_string(i) +
                 ": balanced yet complexity n+1 at horizon";
      }
    }
    push(2, "balance <-> complexity cross-check", pass,
         pass ? "20 + 20 words consistent" : detail);
  }

  // 3. Minimal growth systems: affine tail slope 1, onset <= 50, K stable
  //    under the next convergent.
  {
    bool pass = true;
    std::string detail;
    Alphabet abc = Alphabet::from_chars("abc");
    for (std::vector<long long> breaks :
         {std::vector<long long>{0, 1, 2}, std::vector<long long>{0, 2, 5}}) {
      long long k_prev = 0;
      bool have_prev = false;
      for (const char* alpha_str : {"610/987", "987/1597"}) {
        auto spec = min_growth_system(Angle(Rational(alpha_str)),
                                      Angle(Rational(1, 11)), breaks, abc,
                                      {0, 1, 2});
        Word w = mechanical_word(spec, 2000);
        auto tail = detect_affine_tail(complexity_profile(w, 60));
        if (!tail || tail->slope != 1 || tail->onset > 50) {
          pass = false;
          detail = "no early slope-1 tail for breaks{" +
                   std::to_string(breaks[1]) + "," + std::to_string(breaks[2]) +
                   "} alpha " + alpha_str;
          break;
        }
        if (have_prev && tail->offset != k_prev) {
          pass = false;
          detail = "K unstable across convergents";
          break;
        }
        k_prev = tail->offset;
        have_prev = true;
      }
      if (!pass) break;
    }
    push(3, "minimal growth T(n) = n + K", pass,
         pass ? "both breakpoint sets, K convergent-stable" : detail);
  }

  // 200 seeded random presentations shared by criteria 4 and 5.
  std::vector<Presentation> sample;
  {
    std::mt19937_64 rng(seed * 1000003 + 4);
    for (int i = 0; i < 200; ++i) sample.push_back(sd::random_presentation(rng));
  }

  // 4. Bergman gap classifier + DP vs brute force.
  {
    bool pass = true;
    std::string detail;
    auto ab = Alphabet::from_chars("ab");
    {
      auto cls = classify_growth(Presentation(ab, {ab.parse("ba")}));
      if (cls.tag != GrowthClass::Tag::Boundary || cls.boundary_offset != 1) {
        pass = false;
        detail = "{ba} not Boundary(1)";
      }
    }
    if (pass) {
      Presentation p(ab, {ab.parse("bb")});
      auto cls = classify_growth(p);
      auto [T, V] = growth_profiles(p, 6);
      const long long fib[] = {2, 3, 5, 8, 13, 21};
      if (cls.tag != GrowthClass::Tag::Exponential) {
        pass = false;
        detail = "{bb} not Exponential";
      }
      for (std::size_t n = 1; n <= 6 && pass; ++n)
        if (T.values[n] != BigInt(fib[n - 1])) {
          pass = false;
          detail = "{bb} T not Fibonacci";
        }
    }
    if (pass) {
      Presentation p(ab, {ab.parse("ab"), ab.parse("ba")});
      auto cls = classify_growth(p);
      auto [T, V] = growth_profiles(p, 10);
      if (cls.tag != GrowthClass::Tag::Slow) {
        pass = false;
        detail = "{ab,ba} not Slow";
      }
      for (std::size_t n = 1; n <= 10 && pass; ++n)
        if (T.values[n] != BigInt(2)) {
          pass = false;
          detail = "{ab,ba} T != 2";
        }
    }
    if (pass) {
      auto a1 = Alphabet::from_chars("a");
      auto cls = classify_growth(Presentation(a1, {a1.parse("aa")}));
      if (cls.tag != GrowthClass::Tag::FiniteDim) {
        pass = false;
        detail = "{aa} over {a} not FiniteDim";
      }
    }
    for (std::size_t i = 0; i < sample.size() && pass; ++i) {
      auto [T, V] = growth_profiles(sample[i], 10);
      for (std::size_t n = 0; n <= 10; ++n)
        if (T.values[n] != BigInt(sd::brute_force_count(sample[i], n))) {
          pass = false;
          detail = "DP/brute-force mismatch, presentation " +
                   std::to_string(i) + " at n = " + std::to_string(n);
          break;
        }
    }
    push(4, "Bergman gap classifier", pass,
         pass ? "fixed cases + 200 random presentations exact" : detail);
  }

  // 5. Good words: T_RL <= T, and a T_RL plateau forces Slow/FiniteDim.
  {
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < sample.size() && pass; ++i) {
      FactorAutomaton fa = build_automaton(sample[i]);
      std::size_t window = 2 * fa.n_states + 9;
      auto trl = good_word_profile(fa, window);
      auto [T, V] = growth_profiles(fa, window);
      for (std::size_t n = 0; n <= window; ++n)
        if (trl.values[n] > T.values[n]) {
          pass = false;
          detail = "T_RL > T, presentation " + std::to_string(i);
          break;
        }
      if (pass && slow_growth_criterion(sample[i])) {
        auto tag = classify_growth(fa).tag;
        if (tag != GrowthClass::Tag::Slow &&
            tag != GrowthClass::Tag::FiniteDim) {
          pass = false;
          detail = "plateau without slow growth, presentation " +
                   std::to_string(i);
        }
      }
    }
    push(5, "good words and slow-growth criterion", pass,
         pass ? "200 presentations, zero violations" : detail);
  }

  // 6. Duality.
  {
    bool pass = true;
    std::string detail;
    auto ab = Alphabet::from_chars("ab");
    {
      Word w = repeat(ab.parse("ab"), 20);
      auto rep = verify_duality(ab, factor_data(w, 6));
      std::vector<Word> expect{ab.parse("aa"), ab.parse("bb")};
      if (!rep.ok || rep.anti.words != expect) {
        pass = false;
        detail = "(ab)^inf antidictionary wrong";
      }
    }
    if (pass) {
      Word w = sturmian(Angle(Rational(610, 987)), Angle(Rational(1, 11)), 800);
      auto rep = verify_duality(ab, factor_data(w, 12));
      if (!rep.ok) {
        pass = false;
        detail = "sturmian duality mismatch at length " +
                 std::to_string(rep.first_mismatch_length);
      }
    }
    if (pass) {
      auto spec = min_growth_system(Angle(Rational(610, 987)),
                                    Angle(Rational(1, 11)), {0, 1, 2},
                                    Alphabet::from_chars("abc"), {0, 1, 2});
      Word w = mechanical_word(spec, 2000);
      auto rep = verify_duality(spec.alphabet, factor_data(w, 10));
      if (!rep.ok) {
        pass = false;
        detail = "three-letter duality mismatch";
      }
    }
    push(6, "language/algebra duality", pass,
         pass ? "three words, zero mismatches" : detail);
  }

  // 7. Normal-basis decomposition with exhaustive coverage.
  {
    bool pass = true;
    std::string detail;
    auto ab = Alphabet::from_chars("ab");
    auto a1 = Alphabet::from_chars("a");
    std::vector<Presentation> fixed{
        Presentation(ab, {ab.parse("ba")}),
        Presentation(ab, {ab.parse("ab"), ab.parse("ba")}),
        Presentation(a1, {a1.parse("aa")})};
    for (std::size_t i = 0; i < fixed.size() && pass; ++i) {
      try {
        auto desc = decompose(fixed[i], 12);
        if (!coverage_check(desc, fixed[i], 12).ok) {
          pass = false;
          detail = "coverage fails on fixed case " + std::to_string(i);
        }
      } catch (const std::exception& e) {
        pass = false;
        detail = std::string("decompose failed: ") + e.what();
      }
    }
    if (pass) {  // mutation: dropping the two-ray family must break coverage
      auto desc = decompose(Presentation(ab, {ab.parse("ba")}), 12);
      auto mutated = desc;
      mutated.two_ray.reset();
      if (coverage_check(mutated, Presentation(ab, {ab.parse("ba")}), 12).ok) {
        pass = false;
        detail = "mutation (dropped two_ray) not caught";
      }
    }
    std::mt19937_64 rng(seed * 1000003 + 7);
    std::size_t found = 0, tried = 0;
    while (found < 50 && pass && tried < 100000) {
      ++tried;
      Presentation p = sd::random_presentation(rng);
      auto tag = classify_growth(p).tag;
      if (tag != GrowthClass::Tag::Slow && tag != GrowthClass::Tag::Boundary)
        continue;
      ++found;
      try {
        auto desc = decompose(p, 12);
        if (!coverage_check(desc, p, 12).ok) {
          pass = false;
          detail = std::string("coverage fails on random ") +
                   growth_tag_name(tag) + " presentation " + p.format();
        }
      } catch (const std::exception& e) {
        pass = false;
        detail = std::string("decompose failed on ") + p.format() + ": " +
                 e.what();
      }
    }
    if (pass && found < 50) {
      pass = false;
      detail = "could not sample 50 slow/boundary presentations";
    }
    push(7, "normal-basis decomposition coverage", pass,
         pass ? "fixed + 50 random presentations, mutation caught" : detail);
  }

  // 8. Rauzy dichotomy.
  {
    bool pass = true;
    std::string detail;
    auto ab = Alphabet::from_chars("ab");
    {
      BiInfiniteSpec spec =
          TwoRay{ab.parse("aa"), ab.parse("ab"), ab.parse("bb")};
      auto rep = evolution(spec, 6);
      if (rep.verdict != EvolutionVerdict::LosesStrongConnectivity) {
        pass = false;
        detail = "two-ray word keeps strong connectivity";
      }
    }
    if (pass) {
      BiInfiniteSpec spec = RotationCoding{
          sturmian_spec(Angle(Rational(610, 987)), Angle(Rational(1, 11))),
          false};
      auto rep = evolution(spec, 10);
      if (rep.verdict != EvolutionVerdict::StronglyConnectedThroughout) {
        pass = false;
        detail = "sturmian coding loses strong connectivity";
      }
      for (std::size_t k = 1; k <= 10 && pass; ++k) {
        const auto& st = rep.stats[k - 1];
        std::size_t tk = exact_factor_set(spec, k).size();
        std::size_t tk1 = exact_factor_set(spec, k + 1).size();
        if (st.n_vertices != tk || st.n_edges != tk1) {
          pass = false;
          detail = "edge/vertex bookkeeping broken at k = " + std::to_string(k);
        }
      }
    }
    push(8, "Rauzy evolution dichotomy", pass,
         pass ? "fork word loses SC; sturmian SC through k = 10" : detail);
  }

  // 9. The SW = WT combinatorics.
  {
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(seed * 1000003 + 9);
    for (int i = 0; i < 1000 && pass; ++i) {
      std::size_t slen = 1 + rng() % 6;
      Word s;
      for (std::size_t j = 0; j < slen; ++j)
        s.push_back(static_cast<Sym>(rng() % 2));
      std::size_t k = rng() % 5;
      std::size_t pre = rng() % (slen + 1);
      Word w = repeat(s, k);
      w.insert(w.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(pre));
      if (!is_prefix_of_power(w, s) || !check_conjugacy_shape(s, w)) {
        pass = false;
        detail = "constructed s^k s1 rejected at trial " + std::to_string(i);
      }
    }
    for (int i = 0; i < 1000 && pass; ++i) {
      std::size_t slen = 1 + rng() % 6;
      Word s;
      for (std::size_t j = 0; j < slen; ++j)
        s.push_back(static_cast<Sym>(rng() % 2));
      Word w;
      do {
        w.clear();
        std::size_t wlen = 1 + rng() % 12;
        for (std::size_t j = 0; j < wlen; ++j)
          w.push_back(static_cast<Sym>(rng() % 2));
      } while (is_prefix_of_power(w, s));
      if (check_conjugacy_shape(s, w)) {
        pass = false;
        detail = "non-prefix W accepted at trial " + std::to_string(i);
      }
    }
    push(9, "SW = WT conjugacy shape", pass,
         pass ? "1000 + 1000 seeded instances" : detail);
  }

  return out;
}

}  // namespace growthlab
