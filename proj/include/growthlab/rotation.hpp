#pragma once

// Exact circle-rotation dynamics and their symbolic codings.  All
// arithmetic is over arbitrary-precision rationals; membership and
// endpoint decisions are exact, never floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"

namespace growthlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct ResonanceError : std::runtime_error {
  std::size_t step;
  explicit ResonanceError(std::size_t n)
      : std::runtime_error("orbit point hits an arc endpoint at step " +
                           std::to_string(n)),
        step(n) {}
};

struct DegeneratePartitionError : DataError {
  using DataError::DataError;
};

inline BigInt floor_of(const Rational& x) {
  BigInt num = numerator(x), den = denominator(x);  // den > 0
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

/// Fractional part, always in [0, 1).
inline Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

/// A point on the unit circle: an exact rational in [0, 1).
struct Angle {
  Rational value;

  Angle() = default;
  explicit Angle(Rational v) : value(frac(std::move(v))) {}

  static Angle parse(std::string_view text) {
    std::string s(text);
    try {
      return Angle(Rational(s));
    } catch (const std::exception&) {
      throw ArgumentError("cannot parse rational '" + s + "'");
    }
  }

  std::string str() const {
    std::ostringstream os;
    os << value;
    return os.str();
  }

  friend bool operator==(const Angle& a, const Angle& b) = default;
};

// ---- arcs ------------------------------------------------------------------

/// Half-open arc [lo, hi) with 0 <= lo < hi <= 1.  Wrap-around arcs are
/// stored split in an ArcUnion.
struct Arc {
  Rational lo, hi;

  bool contains(const Rational& x) const { return lo <= x && x < hi; }
  Rational measure() const { return hi - lo; }
};

struct ArcUnion {
  std::vector<Arc> arcs;

  /// Add [lo, hi), endpoints taken mod 1; lo == hi means the full circle.
  void add(const Rational& lo_in, const Rational& hi_in) {
    Rational lo = frac(lo_in), hi = frac(hi_in);
    if (lo == hi) {
      arcs.push_back({Rational(0), Rational(1)});
    } else if (lo < hi) {
      arcs.push_back({lo, hi});
    } else {
      arcs.push_back({lo, Rational(1)});
      if (hi != 0) arcs.push_back({Rational(0), hi});
    }
  }

  bool contains(const Rational& x) const {
    for (const auto& a : arcs)
      if (a.contains(x)) return true;
    return false;
  }

  Rational measure() const {
    Rational m = 0;
    for (const auto& a : arcs) m += a.measure();
    return m;
  }
};

// ---- coding specifications -------------------------------------------------

/// (S^1, T_alpha, U_1..U_s, x0): rotation by alpha coded against one
/// characteristic arc union per alphabet symbol.
struct CodingSpec {
  Angle alpha;
  Angle x0;
  Alphabet alphabet;
  std::vector<ArcUnion> partition;  // indexed by symbol

  /// Arc unions must be pairwise disjoint and cover the circle.
  void validate() const {
    if (partition.size() != alphabet.size())
      throw ArgumentError("partition must assign one arc union per symbol");
    Rational total = 0;
    std::vector<std::pair<Rational, Rational>> segs;
    for (const auto& u : partition) {
      total += u.measure();
      for (const auto& a : u.arcs) segs.emplace_back(a.lo, a.hi);
    }
    if (total != 1) throw ArgumentError("partition does not cover the circle");
    std::sort(segs.begin(), segs.end());
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].first < segs[i - 1].second)
        throw ArgumentError("partition arcs overlap");
  }

  std::vector<Rational> endpoints() const {
    std::vector<Rational> pts;
    for (const auto& u : partition)
      for (const auto& a : u.arcs) {
        pts.push_back(frac(a.lo));
        pts.push_back(frac(a.hi));
      }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }

  std::optional<Sym> symbol_at(const Rational& x) const {
    for (Sym s = 0; s < partition.size(); ++s)
      if (partition[s].contains(x)) return s;
    return std::nullopt;
  }
};

struct NonresonanceCertificate {
  std::size_t horizon = 0;
  bool ok = true;
  std::optional<std::size_t> first_violation;
};

// ---- operations ------------------------------------------------------------

inline Angle orbit_point(const Angle& alpha, const Angle& x0, std::uint64_t n) {
  return Angle(x0.value + Rational(BigInt(n)) * alpha.value);
}

inline NonresonanceCertificate nonresonance_check(const CodingSpec& spec,
                                                  std::size_t horizon) {
  NonresonanceCertificate cert;
  cert.horizon = horizon;
  auto pts = spec.endpoints();
  Rational x = spec.x0.value;
  for (std::size_t n = 0; n < horizon; ++n) {
    if (std::binary_search(pts.begin(), pts.end(), x)) {
      cert.ok = false;
      cert.first_violation = n;
      return cert;
    }
    x = frac(x + spec.alpha.value);
  }
  return cert;
}

/// Coding of the orbit of x0: w_n = the symbol whose arc union contains
/// the n-th orbit point.  Resonant orbit points are an error unless the
/// caller waives the check.
inline Word mechanical_word(const CodingSpec& spec, std::size_t len,
                            bool waive_resonance = false) {
  spec.validate();
  auto pts = spec.endpoints();
  Word w;
  w.reserve(len);
  Rational x = spec.x0.value;
  for (std::size_t n = 0; n < len; ++n) {
    if (!waive_resonance && std::binary_search(pts.begin(), pts.end(), x))
      throw ResonanceError(n);
    auto s = spec.symbol_at(x);
    if (!s) throw InternalError("partition does not cover orbit point");
    w.push_back(*s);
    x = frac(x + spec.alpha.value);
  }
  return w;
}

/// The classic binary spec: U_a = [0, alpha), U_b the complement.
inline CodingSpec sturmian_spec(const Angle& alpha, const Angle& x0) {
  CodingSpec spec{alpha, x0, Alphabet::from_chars("ab"), {}};
  ArcUnion ua, ub;
  if (alpha.value != 0) ua.add(0, alpha.value);
  ub.add(alpha.value, 1);
  spec.partition = {ua, ub};
  return spec;
}

inline Word sturmian(const Angle& alpha, const Angle& x0, std::size_t len,
                     bool waive_resonance = false) {
  return mechanical_word(sturmian_spec(alpha, x0), len, waive_resonance);
}

/// Partition of the circle by the points {n_j alpha}, arcs grouped into
/// per-symbol unions: the minimal-growth coding systems.
inline CodingSpec min_growth_system(const Angle& alpha, const Angle& x0,
                                    const std::vector<long long>& breakpoints,
                                    const Alphabet& alphabet,
                                    const std::vector<Sym>& symbol_assignment) {
  if (breakpoints.empty()) throw ArgumentError("need at least one breakpoint");
  if (symbol_assignment.size() != breakpoints.size())
    throw ArgumentError("one symbol per arc required");
  std::vector<Rational> pts;
  for (long long nj : breakpoints) pts.push_back(frac(Rational(nj) * alpha.value));
  std::vector<Rational> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DegeneratePartitionError("coinciding breakpoint images");

  CodingSpec spec{alpha, x0, alphabet, std::vector<ArcUnion>(alphabet.size())};
  // Arc i runs from the i-th sorted point to the next (cyclically).
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Sym s = symbol_assignment[i];
    if (s >= alphabet.size()) throw ArgumentError("symbol index out of range");
    const Rational& lo = sorted[i];
    const Rational& hi = sorted[(i + 1) % sorted.size()];
    spec.partition[s].add(lo, hi);
  }
  spec.validate();
  return spec;
}

}  // namespace growthlab
