#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "growthlab/infinite.hpp"

using namespace growthlab;

namespace {
const Alphabet ab = Alphabet::from_chars("ab");
const Alphabet abc = Alphabet::from_chars("abc");
}  // namespace

TEST_CASE("windows of periodic words") {
  BiInfiniteSpec spec = Periodic{ab.parse("ab")};
  CHECK(ab.format(window(spec, 0, 6)) == "ababab");
  CHECK(ab.format(window(spec, -3, 6)) == "bababa");
  CHECK(window(spec, 5, 0).empty());
  CHECK_THROWS_AS(window(BiInfiniteSpec(Periodic{Word{}}), 0, 1),
                  ArgumentError);
}

TEST_CASE("windows of rays respect their domains") {
  BiInfiniteSpec right = RightRay{ab.parse("ba"), ab.parse("ab")};
  CHECK(ab.format(window(right, 0, 8)) == "baababab");
  CHECK_THROWS_AS(window(right, -1, 3), PositionError);

  BiInfiniteSpec left = LeftRay{ab.parse("ab"), ab.parse("ba")};
  CHECK(ab.format(window(left, -4, 6)) == "ababba");
  CHECK_THROWS_AS(window(left, 0, 3), PositionError);
}

TEST_CASE("two-ray windows") {
  BiInfiniteSpec spec = TwoRay{abc.parse("ab"), abc.parse("c"), abc.parse("ba")};
  CHECK(abc.format(window(spec, -4, 7)) == "ababcba");
  CHECK(abc.format(window(spec, 0, 3)) == "cba");
  CHECK(abc.format(window(spec, 1, 4)) == "baba");
}

TEST_CASE("rotation coding windows") {
  RotationCoding rc{sturmian_spec(Angle(Rational(1, 2)), Angle(Rational(1, 4))),
                    false};
  BiInfiniteSpec spec = rc;
  CHECK(ab.format(window(spec, 0, 4)) == "abab");
  CHECK(ab.format(window(spec, 1, 3)) == "bab");
  CHECK_THROWS_AS(window(spec, -1, 2), PositionError);
}

TEST_CASE("periodic two-ray detection") {
  CHECK(two_ray_is_periodic(TwoRay{ab.parse("a"), {}, ab.parse("a")}));
  CHECK(two_ray_is_periodic(TwoRay{ab.parse("ab"), {}, ab.parse("ab")}));
  CHECK(two_ray_is_periodic(
      TwoRay{ab.parse("ab"), ab.parse("ab"), ab.parse("ab")}));
  CHECK_FALSE(two_ray_is_periodic(TwoRay{ab.parse("a"), {}, ab.parse("b")}));
  CHECK_FALSE(two_ray_is_periodic(
      TwoRay{ab.parse("ab"), ab.parse("b"), ab.parse("ab")}));
}

namespace {
/// Equality of two two-rays as bi-infinite words, compared on a generous
/// aligned window around the connectors.
bool same_unfolding(const TwoRay& x, const TwoRay& y) {
  // Align so that position 0 starts each connector; the words are equal
  // iff some shift matches.  Shifts up to one period each way suffice for
  // the canonicalizer's adjustments.
  long long max_shift =
      static_cast<long long>(std::max(x.u.size(), x.v.size()) +
                             std::max(y.u.size(), y.v.size()) +
                             x.c.size() + y.c.size() + 4);
  std::size_t span = static_cast<std::size_t>(4 * max_shift) + 24;
  for (long long shift = -max_shift; shift <= max_shift; ++shift) {
    Word wx = window(BiInfiniteSpec(x), -static_cast<long long>(span), 2 * span);
    Word wy = window(BiInfiniteSpec(y), -static_cast<long long>(span) + shift,
                     2 * span);
    if (wx == wy) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("canonical two-ray preserves the word and is rotation-invariant") {
  TwoRay t{ab.parse("ba"), {}, ab.parse("ab")};
  TwoRay c = canonical_two_ray(t);
  CHECK(c.u == least_rotation(c.u));
  CHECK(c.v == least_rotation(c.v));
  CHECK(same_unfolding(t, c));

  // All rotation-compensated variants canonicalize identically.
  TwoRay variant{ab.parse("ab"), ab.parse("a"), ab.parse("ab")};
  CHECK(same_unfolding(t, variant));
  TwoRay cv = canonical_two_ray(variant);
  CHECK(cv.u == c.u);
  CHECK(cv.c == c.c);
  CHECK(cv.v == c.v);
}

TEST_CASE("canonical rays") {
  RightRay r = canonical_right_ray(RightRay{ab.parse("a"), ab.parse("a")});
  CHECK(r.c.empty());
  CHECK(r.v == ab.parse("a"));

  RightRay r2 = canonical_right_ray(RightRay{ab.parse("ab"), ab.parse("ba")});
  // Unfolding must be preserved: ab + bababa... = abb + ababab...
  Word orig = cat(ab.parse("ab"), repeat(ab.parse("ba"), 5));
  Word got = cat(r2.c, repeat(r2.v, (orig.size() - r2.c.size()) / r2.v.size()));
  CHECK(Word(orig.begin(), orig.begin() + got.size()) == got);
  CHECK(r2.v == least_rotation(r2.v));

  LeftRay l = canonical_left_ray(LeftRay{ab.parse("ba"), ab.parse("b")});
  CHECK(l.u == least_rotation(l.u));
  Word lorig = cat(repeat(ab.parse("ba"), 5), ab.parse("b"));
  Word lgot = cat(repeat(l.u, (lorig.size() - l.c.size()) / l.u.size()), l.c);
  CHECK(Word(lorig.end() - lgot.size(), lorig.end()) == lgot);

  CHECK(primitive_root(canonical_right_ray(
                           RightRay{{}, ab.parse("abab")})
                           .v) == ab.parse("ab"));
}

TEST_CASE("exact factor sets of symbolic words") {
  BiInfiniteSpec tr = TwoRay{ab.parse("aa"), ab.parse("ab"), ab.parse("bb")};
  CHECK(exact_factor_set(tr, 1).words ==
        std::set<Word>{ab.parse("a"), ab.parse("b")});
  CHECK(exact_factor_set(tr, 2).words ==
        std::set<Word>{ab.parse("aa"), ab.parse("ab"), ab.parse("bb")});
  CHECK(exact_factor_set(tr, 3).size() == 4);  // aaa aab abb bbb
  CHECK(exact_factor_set(tr, 0).contains(Word{}));

  BiInfiniteSpec per = Periodic{ab.parse("ab")};
  CHECK(exact_factor_set(per, 3).size() == 2);  // aba, bab

  BiInfiniteSpec rr = RightRay{ab.parse("b"), ab.parse("a")};
  CHECK(exact_factor_set(rr, 2).words ==
        std::set<Word>{ab.parse("ba"), ab.parse("aa")});

  BiInfiniteSpec rot = RotationCoding{
      sturmian_spec(Angle(Rational(1, 2)), Angle(Rational(1, 4))), false};
  CHECK(exact_factor_set(rot, 2).words ==
        std::set<Word>{ab.parse("ab"), ab.parse("ba")});
}

TEST_CASE("sturmian exact factor counts are n + 1") {
  BiInfiniteSpec rot = RotationCoding{
      sturmian_spec(Angle(Rational(610, 987)), Angle(Rational(1, 11))), false};
  for (std::size_t n = 1; n <= 12; ++n)
    CHECK(exact_factor_set(rot, n).size() == n + 1);
}
