#pragma once

// Subword-complexity profiles, affine-tail detection and balance checking.

#include <optional>

#include "core.hpp"
#include "rotation.hpp"  // BigInt

namespace growthlab {

enum class ProfileKind { TWord, TAlgebra, VAlgebra, TRL };

inline const char* profile_kind_name(ProfileKind k) {
  switch (k) {
    case ProfileKind::TWord: return "T_word";
    case ProfileKind::TAlgebra: return "T_algebra";
    case ProfileKind::VAlgebra: return "V_algebra";
    case ProfileKind::TRL: return "T_RL";
  }
  return "?";
}

/// Map n -> count for 0 <= n <= horizon, with a per-n exactness flag.
/// Counts computed from a finite prefix are only marked exact inside the
/// window the source can vouch for.
struct GrowthProfile {
  ProfileKind kind = ProfileKind::TWord;
  std::size_t horizon = 0;
  std::vector<BigInt> values;  // values[n], size horizon + 1
  std::vector<bool> exact;
  bool clipped = false;  // requested horizon exceeded the material

  const BigInt& at(std::size_t n) const {
    if (n >= values.size()) throw ArgumentError("profile index out of range");
    return values[n];
  }
};

/// T(n) = slope * n + K for all exact n with onset <= n <= horizon.
struct AffineTail {
  std::size_t onset = 0;
  long long offset = 0;  // K
  int slope = 0;         // 0 or 1
};

struct BalanceReport {
  std::size_t max_discrepancy = 0;
  Word witness_u, witness_v;  // equal-length factors achieving the maximum
};

// ---- complexity ------------------------------------------------------------

/// T_w(n) for 0 <= n <= n_max from the finite word w.  Counts for
/// n > |w| / 2 are flagged prefix-limited (conservative honesty rule for
/// prefixes of infinite words); pass exact_up_to when the generator can
/// vouch for more.
inline GrowthProfile complexity_profile(const Word& w, std::size_t n_max,
                                        std::size_t exact_up_to = 0) {
  GrowthProfile p;
  p.kind = ProfileKind::TWord;
  if (n_max > w.size()) {
    n_max = w.size();
    p.clipped = true;
  }
  p.horizon = n_max;
  p.values.resize(n_max + 1);
  p.exact.resize(n_max + 1);
  std::size_t vouch = std::max(exact_up_to, w.size() / 2);
  for (std::size_t n = 0; n <= n_max; ++n) {
    p.values[n] = static_cast<long long>(factors(w, n).size());
    p.exact[n] = (n <= vouch);
  }
  return p;
}

// ---- affine tails ----------------------------------------------------------

inline std::optional<AffineTail> detect_affine_tail(const GrowthProfile& p) {
  std::vector<std::size_t> pts;  // exact sample positions, n >= 1
  for (std::size_t n = 1; n < p.values.size(); ++n)
    if (p.exact[n]) pts.push_back(n);
  if (pts.size() < 3) return std::nullopt;

  std::optional<AffineTail> best;
  for (int slope : {0, 1}) {
    std::size_t last = pts.back();
    BigInt kb = p.values[last] - slope * BigInt(last);
    // Walk back from the horizon to the least onset still on the line.
    std::size_t onset = last;
    std::size_t supporting = 0;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
      if (p.values[*it] != slope * BigInt(*it) + kb) break;
      onset = *it;
      ++supporting;
    }
    if (supporting < 3) continue;
    AffineTail t;
    t.onset = onset;
    t.slope = slope;
    t.offset = static_cast<long long>(kb);
    if (!best || t.onset < best->onset) best = t;
  }
  return best;
}

// ---- balance ---------------------------------------------------------------

/// Per-symbol extrema of factor letter-counts over each length up to
/// n_max; the discrepancy is the largest max-min spread observed.
inline BalanceReport balance_check(const Word& w, std::size_t n_max) {
  BalanceReport rep;
  if (w.empty()) return rep;
  n_max = std::min(n_max, w.size());
  Sym max_sym = *std::max_element(w.begin(), w.end());
  // prefix[a][i] = occurrences of a in w[0..i)
  std::vector<std::vector<std::size_t>> prefix(
      max_sym + 1, std::vector<std::size_t>(w.size() + 1, 0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Sym a = 0; a <= max_sym; ++a) prefix[a][i + 1] = prefix[a][i];
    prefix[w[i]][i + 1]++;
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (Sym a = 0; a <= max_sym; ++a) {
      std::size_t lo = w.size(), hi = 0, lo_at = 0, hi_at = 0;
      for (std::size_t i = 0; i + n <= w.size(); ++i) {
        std::size_t cnt = prefix[a][i + n] - prefix[a][i];
        if (cnt < lo) { lo = cnt; lo_at = i; }
        if (cnt > hi) { hi = cnt; hi_at = i; }
      }
      if (hi - lo > rep.max_discrepancy) {
        rep.max_discrepancy = hi - lo;
        rep.witness_u = subword(w, hi_at, n);
        rep.witness_v = subword(w, lo_at, n);
      }
    }
  }
  return rep;
}

// ---- uniform recurrence ----------------------------------------------------

/// Least N such that every length-N factor of w contains v, when the
/// prefix witnesses one; nullopt means inconclusive, not a refutation.
inline std::optional<std::size_t> uniform_recurrence_bound(const Word& w,
                                                           const Word& v) {
  if (v.empty() || v.size() > w.size())
    throw ArgumentError("v must be a nonempty factor of w");
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i + v.size() <= w.size(); ++i)
    if (std::equal(v.begin(), v.end(), w.begin() + i)) occ.push_back(i);
  if (occ.empty()) throw ArgumentError("v is not a factor of w");
  std::size_t need = occ.front() + v.size();      // window at the start
  for (std::size_t j = 1; j < occ.size(); ++j)    // gaps between occurrences
    need = std::max(need, occ[j] - occ[j - 1] + v.size() - 1);
  need = std::max(need, w.size() - occ.back());   // window at the end
  // A bound wider than half the material is not a real witness: the
  // prefix then checks fewer than two disjoint windows.
  if (need > w.size() / 2) return std::nullopt;
  return need;
}

}  // namespace growthlab
