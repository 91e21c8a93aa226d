#pragma once

// Alphabets, finite words and the small word-combinatorics toolbox the
// rest of the library is built on.  Words are value-semantic vectors of
// symbol indices; the Alphabet maps them to printable symbols.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace growthlab {

using Sym = std::uint32_t;
using Word = std::vector<Sym>;

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PositionError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Ordered alphabet of distinct symbols.  The order is fixed at creation
/// and drives length-lex enumeration everywhere downstream.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols) : syms_(std::move(symbols)) {
    if (syms_.empty()) throw ArgumentError("alphabet must be nonempty");
    for (Sym i = 0; i < syms_.size(); ++i) {
      if (syms_[i].empty()) throw ArgumentError("alphabet symbol must be nonempty");
      if (!index_.emplace(syms_[i], i).second)
        throw ArgumentError("duplicate alphabet symbol: " + syms_[i]);
    }
  }

  /// One symbol per character, e.g. from_chars("ab").
  static Alphabet from_chars(std::string_view chars) {
    std::vector<std::string> syms;
    for (char ch : chars) syms.emplace_back(1, ch);
    return Alphabet(std::move(syms));
  }

  std::size_t size() const { return syms_.size(); }

  const std::string& symbol(Sym i) const {
    if (i >= syms_.size()) throw ArgumentError("symbol index out of range");
    return syms_[i];
  }

  std::optional<Sym> index_of(std::string_view s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Parse a word.  With an empty separator every character is one symbol;
  /// otherwise the text is split on the separator.
  Word parse(std::string_view text, std::string_view sep = "") const {
    Word w;
    if (sep.empty()) {
      for (char ch : text) {
        auto i = index_of(std::string_view(&ch, 1));
        if (!i) throw ArgumentError(std::string("unknown symbol '") + ch + "'");
        w.push_back(*i);
      }
    } else {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        std::string_view tok = text.substr(pos, next == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : next - pos);
        if (!tok.empty()) {
          auto i = index_of(tok);
          if (!i) throw ArgumentError("unknown symbol '" + std::string(tok) + "'");
          w.push_back(*i);
        }
        if (next == std::string_view::npos) break;
        pos = next + sep.size();
      }
    }
    return w;
  }

  std::string format(const Word& w, std::string_view sep = "") const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i && !sep.empty()) out += sep;
      out += symbol(w[i]);
    }
    return out;
  }

  bool operator==(const Alphabet& other) const { return syms_ == other.syms_; }

 private:
  std::vector<std::string> syms_;
  std::map<std::string, Sym, std::less<>> index_;
};

// ---- basic word helpers ----------------------------------------------------

inline Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word repeat(const Word& u, std::size_t times) {
  Word w;
  w.reserve(u.size() * times);
  for (std::size_t i = 0; i < times; ++i) w.insert(w.end(), u.begin(), u.end());
  return w;
}

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline Word subword(const Word& w, std::size_t pos, std::size_t len) {
  if (pos + len > w.size()) throw ArgumentError("subword out of range");
  return Word(w.begin() + pos, w.begin() + pos + len);
}

inline bool contains_factor(const Word& w, const Word& f) {
  if (f.empty()) return true;
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

inline std::size_t count_symbol(const Word& w, Sym a) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

/// Left rotation by one: abc -> bca.
inline Word rotated_left(Word w, std::size_t by = 1) {
  if (w.empty()) return w;
  by %= w.size();
  std::rotate(w.begin(), w.begin() + by, w.end());
  return w;
}

inline Word rotated_right(Word w) {
  if (w.empty()) return w;
  std::rotate(w.begin(), w.end() - 1, w.end());
  return w;
}

/// Lexicographically least cyclic rotation.
inline Word least_rotation(const Word& w) {
  Word best = w;
  Word cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    cur = rotated_left(cur);
    if (cur < best) best = cur;
  }
  return best;
}

/// Shortest word p with w = p^k; w itself when aperiodic.
inline Word primitive_root(const Word& w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < w.size() && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return Word(w.begin(), w.begin() + d);
  }
  return w;  // unreachable, d = |w| always matches
}

// ---- factor sets -----------------------------------------------------------

/// The set F_n(w) of distinct length-n factors.
struct FactorSet {
  std::size_t n = 0;
  std::set<Word> words;
  bool horizon_exceeded = false;  // n > |w|, result empty by convention

  std::size_t size() const { return words.size(); }
  bool contains(const Word& w) const { return words.count(w) != 0; }
};

inline FactorSet factors(const Word& w, std::size_t n) {
  FactorSet fs;
  fs.n = n;
  if (n > w.size()) {
    fs.horizon_exceeded = true;
    return fs;
  }
  for (std::size_t i = 0; i + n <= w.size(); ++i)
    fs.words.insert(Word(w.begin() + i, w.begin() + i + n));
  return fs;
}

// ---- enumeration -----------------------------------------------------------

/// All words of exactly length n, in lex order.
inline std::vector<Word> all_words(const Alphabet& a, std::size_t n) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (Sym s = 0; s < a.size(); ++s) {
      cur.push_back(s);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// All words of length <= n in length-lex order.
inline std::vector<Word> words_up_to(const Alphabet& a, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = all_words(a, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// ---- the SW = WT combinatorics ---------------------------------------------

/// True iff W = s^k s1 with s1 a prefix of s, i.e. W is a prefix of s^inf.
inline bool is_prefix_of_power(const Word& W, const Word& s) {
  if (s.empty()) throw ArgumentError("is_prefix_of_power: s must be nonempty");
  for (std::size_t i = 0; i < W.size(); ++i)
    if (W[i] != s[i % s.size()]) return false;
  return true;
}

/// Solve S.W = W.T for T with |T| = |S|.  A solution exists exactly when W
/// is a prefix of S^inf, and then T is the final |S|-block of S.W.
inline std::optional<Word> check_conjugacy_shape(const Word& S, const Word& W) {
  if (S.empty()) throw ArgumentError("check_conjugacy_shape: S must be nonempty");
  Word sw = cat(S, W);
  // S.W = W.T demands that W is a prefix of S.W.
  for (std::size_t i = 0; i < W.size(); ++i)
    if (sw[i] != W[i]) return std::nullopt;
  Word t(sw.end() - static_cast<std::ptrdiff_t>(S.size()), sw.end());
  return t;
}

}  // namespace growthlab
