#pragma once

// Symbolic one- and two-sided infinite words and their finite windows.
//
// Coordinate convention: position 0 is the first symbol of the connector c
// (TwoRay / LeftRay / RightRay) or of the period u (Periodic); negative
// positions unfold into the left periodic ray.

#include <numeric>
#include <variant>

#include "core.hpp"
#include "rotation.hpp"

namespace growthlab {

struct Periodic {
  Word u;  // ...uuu.uuu...
};
struct RightRay {
  Word c, v;  // c v^inf, defined on positions >= 0
};
struct LeftRay {
  Word u, c;  // u^(inf/2) c, defined on positions < |c|
};
struct TwoRay {
  Word u, c, v;  // u^(inf/2) c v^(inf/2)
};
struct RotationCoding {
  CodingSpec spec;
  bool waive_resonance = false;
};

using BiInfiniteSpec =
    std::variant<Periodic, RightRay, LeftRay, TwoRay, RotationCoding>;

namespace detail {
inline std::size_t mod_index(long long i, std::size_t m) {
  long long mm = static_cast<long long>(m);
  long long r = i % mm;
  if (r < 0) r += mm;
  return static_cast<std::size_t>(r);
}

inline void require_nonempty_period(const Word& w, const char* which) {
  if (w.empty())
    throw ArgumentError(std::string("periodic part ") + which +
                        " must be nonempty");
}
}  // namespace detail

/// The length-len factor starting at position origin.
inline Word window(const BiInfiniteSpec& spec, long long origin,
                   std::size_t len) {
  Word out;
  out.reserve(len);
  if (const auto* p = std::get_if<Periodic>(&spec)) {
    detail::require_nonempty_period(p->u, "u");
    for (std::size_t j = 0; j < len; ++j)
      out.push_back(p->u[detail::mod_index(origin + static_cast<long long>(j),
                                           p->u.size())]);
    return out;
  }
  if (const auto* r = std::get_if<RightRay>(&spec)) {
    detail::require_nonempty_period(r->v, "v");
    if (origin < 0)
      throw PositionError("RightRay is undefined at negative positions");
    for (std::size_t j = 0; j < len; ++j) {
      long long i = origin + static_cast<long long>(j);
      if (i < static_cast<long long>(r->c.size()))
        out.push_back(r->c[static_cast<std::size_t>(i)]);
      else
        out.push_back(
            r->v[detail::mod_index(i - static_cast<long long>(r->c.size()),
                                   r->v.size())]);
    }
    return out;
  }
  if (const auto* l = std::get_if<LeftRay>(&spec)) {
    detail::require_nonempty_period(l->u, "u");
    if (origin + static_cast<long long>(len) > static_cast<long long>(l->c.size()))
      throw PositionError("LeftRay is undefined beyond the connector");
    for (std::size_t j = 0; j < len; ++j) {
      long long i = origin + static_cast<long long>(j);
      if (i < 0)
        out.push_back(l->u[detail::mod_index(i, l->u.size())]);
      else
        out.push_back(l->c[static_cast<std::size_t>(i)]);
    }
    return out;
  }
  if (const auto* t = std::get_if<TwoRay>(&spec)) {
    detail::require_nonempty_period(t->u, "u");
    detail::require_nonempty_period(t->v, "v");
    for (std::size_t j = 0; j < len; ++j) {
      long long i = origin + static_cast<long long>(j);
      if (i < 0)
        out.push_back(t->u[detail::mod_index(i, t->u.size())]);
      else if (i < static_cast<long long>(t->c.size()))
        out.push_back(t->c[static_cast<std::size_t>(i)]);
      else
        out.push_back(
            t->v[detail::mod_index(i - static_cast<long long>(t->c.size()),
                                   t->v.size())]);
    }
    return out;
  }
  const auto& rc = std::get<RotationCoding>(spec);
  if (origin < 0)
    throw PositionError("rotation coding is undefined at negative positions");
  Word prefix = mechanical_word(rc.spec,
                                static_cast<std::size_t>(origin) + len,
                                rc.waive_resonance);
  return Word(prefix.begin() + origin, prefix.begin() + origin + len);
}

/// Detects the degenerate TwoRay whose unfolding is just u^inf.
inline bool two_ray_is_periodic(const TwoRay& t) {
  detail::require_nonempty_period(t.u, "u");
  detail::require_nonempty_period(t.v, "v");
  std::size_t span = t.c.size() + std::lcm(t.u.size(), t.v.size()) + t.u.size();
  Word w = window(BiInfiniteSpec(t), 0, span);
  // Left ray forces period |u|; check the right side keeps it, phase
  // aligned so that position -1 carries the last symbol of u.
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != t.u[i % t.u.size()]) return false;
  return true;
}

// ---- canonical forms -------------------------------------------------------
//
// Families are defined only up to cyclic shifts of their periodic parts.
// Canonicalization first shrinks the connector by absorbing aligned symbols
// into the periodic rays, then rotates each period to its lexicographically
// least form, re-extending the connector to compensate.

inline TwoRay canonical_two_ray(TwoRay t) {
  detail::require_nonempty_period(t.u, "u");
  detail::require_nonempty_period(t.v, "v");
  t.u = primitive_root(t.u);
  t.v = primitive_root(t.v);
  // Absorb connector symbols into the rays while they continue the period.
  while (!t.c.empty() && t.c.front() == t.u.front()) {
    t.c.erase(t.c.begin());
    t.u = rotated_left(t.u);
  }
  while (!t.c.empty() && t.c.back() == t.v.back()) {
    t.c.pop_back();
    t.v.insert(t.v.begin(), t.v.back());
    t.v.pop_back();
  }
  // Rotate periods to least form, moving the slack into the connector.
  Word lu = least_rotation(t.u);
  for (std::size_t j = 0; j < t.u.size() && t.u != lu; ++j) {
    t.c.insert(t.c.begin(), t.u.back());
    t.u = rotated_right(t.u);
  }
  Word lv = least_rotation(t.v);
  for (std::size_t j = 0; j < t.v.size() && t.v != lv; ++j) {
    t.c.push_back(t.v.front());
    t.v = rotated_left(t.v);
  }
  return t;
}

inline RightRay canonical_right_ray(RightRay r) {
  detail::require_nonempty_period(r.v, "v");
  r.v = primitive_root(r.v);
  while (!r.c.empty() && r.c.back() == r.v.back()) {
    r.c.pop_back();
    r.v.insert(r.v.begin(), r.v.back());
    r.v.pop_back();
  }
  Word lv = least_rotation(r.v);
  for (std::size_t j = 0; j < r.v.size() && r.v != lv; ++j) {
    r.c.push_back(r.v.front());
    r.v = rotated_left(r.v);
  }
  return r;
}

inline LeftRay canonical_left_ray(LeftRay l) {
  detail::require_nonempty_period(l.u, "u");
  l.u = primitive_root(l.u);
  while (!l.c.empty() && l.c.front() == l.u.front()) {
    l.c.erase(l.c.begin());
    l.u = rotated_left(l.u);
  }
  Word lu = least_rotation(l.u);
  for (std::size_t j = 0; j < l.u.size() && l.u != lu; ++j) {
    l.c.insert(l.c.begin(), l.u.back());
    l.u = rotated_right(l.u);
  }
  return l;
}

// ---- exact factor sets -----------------------------------------------------

/// F_n of the infinite word, exact.  For symbolic variants a finite window
/// provably containing every length-n factor is unfolded; for rotation
/// codings by p/q a prefix of length q + n suffices since the orbit is
/// q-periodic.
inline FactorSet exact_factor_set(const BiInfiniteSpec& spec, std::size_t n) {
  if (n == 0) {
    FactorSet fs;
    fs.n = 0;
    fs.words.insert(Word{});
    return fs;
  }
  long long nn = static_cast<long long>(n);
  if (const auto* p = std::get_if<Periodic>(&spec)) {
    Word w = window(spec, 0, p->u.size() + n - 1);
    return factors(w, n);
  }
  if (const auto* r = std::get_if<RightRay>(&spec)) {
    Word w = window(spec, 0, r->c.size() + r->v.size() + n - 1);
    return factors(w, n);
  }
  if (const auto* l = std::get_if<LeftRay>(&spec)) {
    long long origin = -nn - static_cast<long long>(l->u.size());
    Word w = window(spec, origin,
                    static_cast<std::size_t>(-origin) + l->c.size());
    return factors(w, n);
  }
  if (const auto* t = std::get_if<TwoRay>(&spec)) {
    long long origin = -nn - static_cast<long long>(t->u.size());
    std::size_t len = static_cast<std::size_t>(-origin) + t->c.size() + n +
                      t->v.size();
    Word w = window(spec, origin, len);
    return factors(w, n);
  }
  const auto& rc = std::get<RotationCoding>(spec);
  BigInt q = denominator(rc.spec.alpha.value);
  if (q > 1000000) throw ArgumentError("rotation denominator too large for exact factor sets");
  std::size_t len = static_cast<std::size_t>(q) + n;
  Word w = mechanical_word(rc.spec, len, rc.waive_resonance);
  return factors(w, n);
}

}  // namespace growthlab
