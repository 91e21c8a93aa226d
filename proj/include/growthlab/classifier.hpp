#pragma once

// Decomposition of boundary/slow factor languages into normal-basis
// families, plus the finite-horizon witness machinery for the uniformly
// recurrent (mechanical-word) case.

#include <random>

#include "monomial.hpp"
#include "rauzy.hpp"

namespace growthlab {

struct RightRayFamily {
  Word d, v;  // d v^(inf/2)
};
struct LeftRayFamily {
  Word u, c;  // u^(inf/2) c
};
struct PumpFamily {
  Word e, R, f;  // e R^k f, k in N
};
struct TwoRayFamily {
  Word u, c, v;  // u^(inf/2) c v^(inf/2)
};
struct BridgeFamily {
  Word E, u, c, v, F;  // E u^n c v^m F
  std::size_t count_bound = 0;  // max words per length observed at desk scale
};

/// The family decomposition of a boundary/slow normal basis: the language
/// is exactly the set of factors of the described words.
struct NormalBasisDescription {
  std::vector<Word> finite_part;
  std::vector<LeftRayFamily> left_rays;
  std::vector<RightRayFamily> right_rays;
  std::vector<PumpFamily> pump_series;
  std::optional<TwoRayFamily> two_ray;
  std::vector<BridgeFamily> bridge_series;
};

struct CoverageReport {
  bool ok = true;
  std::size_t fail_length = 0;
  Word example;
  bool missing = false;  // true: normal word not covered; false: over-generation
};

// ---- coverage --------------------------------------------------------------

namespace detail {

inline void add_factors_up_to(std::vector<std::set<Word>>& covered,
                              const Word& w, std::size_t n_max) {
  for (std::size_t n = 0; n <= std::min(n_max, w.size()); ++n)
    for (std::size_t i = 0; i + n <= w.size(); ++i)
      covered[n].insert(Word(w.begin() + i, w.begin() + i + n));
}

}  // namespace detail

/// Set equality between the normal words and the factors of the described
/// families, length by length up to n_max.
inline CoverageReport coverage_check(const NormalBasisDescription& desc,
                                     const Presentation& p,
                                     std::size_t n_max) {
  std::vector<std::set<Word>> covered(n_max + 1);
  for (const Word& w : desc.finite_part)
    detail::add_factors_up_to(covered, w, n_max);
  for (const auto& r : desc.right_rays) {
    std::size_t t = n_max / r.v.size() + 3;
    detail::add_factors_up_to(covered, cat(r.d, repeat(r.v, t)), n_max);
  }
  for (const auto& l : desc.left_rays) {
    std::size_t t = n_max / l.u.size() + 3;
    detail::add_factors_up_to(covered, cat(repeat(l.u, t), l.c), n_max);
  }
  for (const auto& pf : desc.pump_series) {
    std::size_t kmax = n_max / pf.R.size() + 2;
    for (std::size_t k = 0; k <= kmax; ++k)
      detail::add_factors_up_to(
          covered, cat(cat(pf.e, repeat(pf.R, k)), pf.f), n_max);
  }
  if (desc.two_ray) {
    const auto& t = *desc.two_ray;
    std::size_t su = n_max / t.u.size() + 3, sv = n_max / t.v.size() + 3;
    detail::add_factors_up_to(
        covered, cat(cat(repeat(t.u, su), t.c), repeat(t.v, sv)), n_max);
  }
  for (const auto& b : desc.bridge_series) {
    std::size_t nu = n_max / b.u.size() + 2, nv = n_max / b.v.size() + 2;
    for (std::size_t n = 0; n <= nu; ++n)
      for (std::size_t m = 0; m <= nv; ++m)
        detail::add_factors_up_to(
            covered,
            cat(cat(cat(cat(b.E, repeat(b.u, n)), b.c), repeat(b.v, m)), b.F),
            n_max);
  }

  CoverageReport rep;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto normals = normal_words(p, n);
    std::set<Word> nset(normals.begin(), normals.end());
    for (const Word& w : nset)
      if (!covered[n].count(w)) {
        rep.ok = false;
        rep.fail_length = n;
        rep.example = w;
        rep.missing = true;
        return rep;
      }
    for (const Word& w : covered[n])
      if (!nset.count(w)) {
        rep.ok = false;
        rep.fail_length = n;
        rep.example = w;
        rep.missing = false;
        return rep;
      }
  }
  return rep;
}

// ---- decomposition ---------------------------------------------------------

namespace detail {

struct CycleInfo {
  std::size_t scc = 0;
  std::vector<std::size_t> order;            // states in cycle order
  std::map<std::size_t, std::size_t> pos;    // state -> index in order
  Word word;                                 // labels along order
};

/// Cycle word read starting at state q (q in the cycle).
inline Word cycle_word_at(const CycleInfo& ci, std::size_t q) {
  std::size_t i = ci.pos.at(q);
  Word w(ci.word.begin() + static_cast<std::ptrdiff_t>(i), ci.word.end());
  w.insert(w.end(), ci.word.begin(), ci.word.begin() + static_cast<std::ptrdiff_t>(i));
  return w;
}

/// Labels along the cycle from q to p (empty when q == p).
inline Word cycle_path(const CycleInfo& ci, std::size_t q, std::size_t p) {
  std::size_t i = ci.pos.at(q), j = ci.pos.at(p), n = ci.order.size();
  Word w;
  while (i != j) {
    w.push_back(ci.word[i]);
    i = (i + 1) % n;
  }
  return w;
}

}  // namespace detail

/// Path decomposition of the trim automaton into the theorem's families.
/// Precondition: the growth class is finite-dimensional, slow or boundary.
inline NormalBasisDescription decompose(const Presentation& p,
                                        std::size_t verify_to = 12) {
  FactorAutomaton fa = build_automaton(p);
  GrowthClass cls = classify_growth(fa);
  if (cls.tag != GrowthClass::Tag::FiniteDim &&
      cls.tag != GrowthClass::Tag::Slow &&
      cls.tag != GrowthClass::Tag::Boundary)
    throw ArgumentError(std::string("decompose requires a finite-dimensional, "
                                    "slow or boundary algebra, got ") +
                        growth_tag_name(cls.tag));

  // Cycle structure.  In this regime every nontrivial SCC is one simple
  // cycle: each member has exactly one in-component successor.
  std::vector<std::optional<detail::CycleInfo>> cycles(fa.n_sccs);
  for (std::size_t c = 0; c < fa.n_sccs; ++c) {
    if (fa.scc_cycle_mult[c] != 1) continue;
    detail::CycleInfo ci;
    ci.scc = c;
    std::size_t q0 = fa.scc_members[c].front(), q = q0;
    do {
      ci.pos[q] = ci.order.size();
      ci.order.push_back(q);
      bool advanced = false;
      for (Sym a = 0; a < fa.alphabet_size() && !advanced; ++a) {
        long t = fa.delta[q][a];
        if (t != FactorAutomaton::DEAD &&
            fa.scc_id[static_cast<std::size_t>(t)] == static_cast<int>(c)) {
          ci.word.push_back(a);
          q = static_cast<std::size_t>(t);
          advanced = true;
        }
      }
      if (!advanced) throw InternalError("broken cycle structure");
    } while (q != q0);
    cycles[c] = std::move(ci);
  }
  auto is_cyclic_state = [&](std::size_t q) { return fa.in_cycle(q); };

  NormalBasisDescription desc;

  // Finite part: labels of paths through acyclic states only.
  if (!is_cyclic_state(fa.initial)) {
    Word cur;
    auto rec = [&](auto&& self, std::size_t q) -> void {
      desc.finite_part.push_back(cur);
      for (Sym a = 0; a < fa.alphabet_size(); ++a) {
        long t = fa.delta[q][a];
        if (t == FactorAutomaton::DEAD || is_cyclic_state(static_cast<std::size_t>(t)))
          continue;
        cur.push_back(a);
        self(self, static_cast<std::size_t>(t));
        cur.pop_back();
      }
    };
    rec(rec, fa.initial);
  }

  // Entries: acyclic-only paths from the initial state into each cycle.
  std::map<std::size_t, std::vector<std::pair<Word, std::size_t>>> entries;
  {
    if (is_cyclic_state(fa.initial)) {
      entries[static_cast<std::size_t>(fa.scc_id[fa.initial])]
          .push_back({Word{}, fa.initial});
    } else {
      Word cur;
      auto rec = [&](auto&& self, std::size_t q) -> void {
        for (Sym a = 0; a < fa.alphabet_size(); ++a) {
          long tl = fa.delta[q][a];
          if (tl == FactorAutomaton::DEAD) continue;
          std::size_t t = static_cast<std::size_t>(tl);
          cur.push_back(a);
          if (is_cyclic_state(t))
            entries[static_cast<std::size_t>(fa.scc_id[t])].push_back({cur, t});
          else
            self(self, t);
          cur.pop_back();
        }
      };
      rec(rec, fa.initial);
    }
  }

  // Exits and corridors, explored from each cycle boundary edge.
  struct Exit {
    std::size_t from;  // cycle state
    Word label;        // maximal acyclic continuation
  };
  struct Corridor {
    std::size_t scc_from, from;  // first cycle, exit state
    Word label;                  // connector
    std::size_t scc_to, to;      // second cycle, entry state
  };
  std::map<std::size_t, std::vector<Exit>> exits;  // by scc
  std::vector<Corridor> corridors;
  for (std::size_t c = 0; c < fa.n_sccs; ++c) {
    if (!cycles[c]) continue;
    for (std::size_t pstate : fa.scc_members[c]) {
      for (Sym a = 0; a < fa.alphabet_size(); ++a) {
        long tl = fa.delta[pstate][a];
        if (tl == FactorAutomaton::DEAD) continue;
        std::size_t t = static_cast<std::size_t>(tl);
        if (fa.scc_id[t] == static_cast<int>(c)) continue;  // cycle edge
        Word cur{a};
        auto rec = [&](auto&& self, std::size_t q) -> void {
          if (is_cyclic_state(q)) {
            corridors.push_back({c, pstate, cur,
                                 static_cast<std::size_t>(fa.scc_id[q]), q});
            return;
          }
          bool extended = false;
          for (Sym b = 0; b < fa.alphabet_size(); ++b) {
            long ul = fa.delta[q][b];
            if (ul == FactorAutomaton::DEAD) continue;
            extended = true;
            cur.push_back(b);
            self(self, static_cast<std::size_t>(ul));
            cur.pop_back();
          }
          if (!extended) exits[c].push_back({pstate, cur});
        };
        rec(rec, t);
      }
    }
  }

  // Family emission per cycle.
  for (std::size_t c = 0; c < fa.n_sccs; ++c) {
    if (!cycles[c]) continue;
    const auto& ci = *cycles[c];
    bool has_outside = !exits[c].empty();
    for (const auto& cor : corridors)
      if (cor.scc_from == c) has_outside = true;
    for (const auto& [d, q] : entries[c]) {
      for (const auto& ex : exits[c]) {
        Word around = detail::cycle_path(ci, q, ex.from);
        Word u_at_exit = detail::cycle_word_at(ci, ex.from);
        if (d.empty()) {
          LeftRay l = canonical_left_ray(LeftRay{u_at_exit, ex.label});
          desc.left_rays.push_back({l.u, l.c});
        } else {
          desc.pump_series.push_back({cat(d, around), u_at_exit, ex.label});
        }
      }
      if (!has_outside) {
        RightRay r =
            canonical_right_ray(RightRay{d, detail::cycle_word_at(ci, q)});
        desc.right_rays.push_back({r.c, r.v});
      }
    }
  }

  // Corridors: the two-ray word and any non-aligned bridge residue.
  if (corridors.size() > 1)
    throw InternalError("multiple two-cycle corridors in a boundary algebra");
  for (const auto& cor : corridors) {
    Word u = detail::cycle_word_at(*cycles[cor.scc_from], cor.from);
    Word v = detail::cycle_word_at(*cycles[cor.scc_to], cor.to);
    TwoRay canon = canonical_two_ray(TwoRay{u, cor.label, v});
    if (two_ray_is_periodic(canon))
      throw InternalError("degenerate corridor: two-ray word is periodic");
    desc.two_ray = TwoRayFamily{canon.u, canon.c, canon.v};
    for (const auto& [d, q] : entries[cor.scc_from]) {
      Word prefix = cat(d, detail::cycle_path(*cycles[cor.scc_from], q, cor.from));
      if (!is_prefix_of_power(reversed(prefix), reversed(u)))
        desc.bridge_series.push_back({prefix, u, cor.label, v, Word{}, 0});
    }
    for (const auto& ex : exits[cor.scc_to]) {
      Word tail = cat(detail::cycle_path(*cycles[cor.scc_to], cor.to, ex.from),
                      ex.label);
      desc.bridge_series.push_back({Word{}, u, cor.label, v, tail, 0});
    }
  }

  // Record the observed per-length bridge counts.
  for (auto& b : desc.bridge_series) {
    std::size_t bound = 0;
    for (std::size_t k = 0; k <= 64; ++k) {
      std::size_t base = b.E.size() + b.c.size() + b.F.size();
      if (k < base) continue;
      std::size_t cnt = 0;
      for (std::size_t n = 0; n * b.u.size() <= k - base; ++n)
        if (((k - base) - n * b.u.size()) % b.v.size() == 0) ++cnt;
      bound = std::max(bound, cnt);
    }
    b.count_bound = bound;
  }

  // Paths threading three cycles are impossible here; the chain-depth
  // guard in the classifier already enforced it, but double-check.
  if (fa.cycle_chain_depth() > 2)
    throw InternalError("cycle chain depth exceeds 2 under boundary class");

  auto rep = coverage_check(desc, p, verify_to);
  if (!rep.ok)
    throw InternalError(
        "decomposition coverage failure at length " +
        std::to_string(rep.fail_length) + ": " +
        (rep.missing ? "uncovered normal word" : "over-generated word"));
  return desc;
}

// ---- case-2 witnesses ------------------------------------------------------

struct Case2Witness {
  std::size_t horizon = 0;
  long long offset = 0;  // the complexity tail constant K
  std::vector<std::pair<Word, std::size_t>> recurrence_table;
  Antidictionary anti;
  bool duality_ok = false;
  bool inconclusive = false;
};

struct NotCase2Error : DataError {
  using DataError::DataError;
};

/// Finite-scale evidence that a coding spec generates a case-2 normal
/// basis: affine complexity tail of slope 1, uniform recurrence of
/// sampled factors, and a duality-consistent truncated antidictionary.
inline Case2Witness witness_case2(const CodingSpec& spec, std::size_t horizon,
                                  std::size_t samples,
                                  std::uint64_t seed = 0) {
  auto cert = nonresonance_check(spec, horizon);
  if (!cert.ok)
    throw ResonanceError(*cert.first_violation);
  Word w = mechanical_word(spec, horizon);

  Case2Witness wit;
  wit.horizon = horizon;
  std::size_t n_max = std::min<std::size_t>(horizon / 4, 60);
  auto profile = complexity_profile(w, n_max);
  auto tail = detect_affine_tail(profile);
  if (!tail || tail->slope != 1)
    throw NotCase2Error("complexity tail is not n + K: not a case-2 witness");
  wit.offset = tail->offset;

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t len =
        1 + static_cast<std::size_t>(rng()) %
                std::max<std::size_t>(1, std::min(horizon / 40, w.size()));
    std::size_t pos = rng() % (w.size() - len + 1);
    Word v = subword(w, pos, len);
    auto bound = uniform_recurrence_bound(w, v);
    if (!bound) {
      wit.inconclusive = true;
      continue;
    }
    wit.recurrence_table.emplace_back(std::move(v), *bound);
  }

  std::size_t m = std::min<std::size_t>(10, horizon / 2);
  auto data = factor_data(w, m);
  auto duality = verify_duality(spec.alphabet, data);
  wit.anti = duality.anti;
  wit.duality_ok = duality.ok;
  return wit;
}

}  // namespace growthlab
