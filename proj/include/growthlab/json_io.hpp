#pragma once

// JSON (and TSV) views of the analysis results, schema "growthlab/1".
// Counts are serialized as decimal strings so arbitrary-precision values
// survive the round trip.

#include <json.hpp>

#include "classifier.hpp"
#include "rauzy.hpp"

namespace growthlab {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "growthlab/1";

inline std::string big_str(const BigInt& v) { return v.str(); }

inline Json to_json(const GrowthProfile& p) {
  Json j;
  j["kind"] = profile_kind_name(p.kind);
  j["horizon"] = p.horizon;
  j["clipped"] = p.clipped;
  Json vals = Json::array(), exact = Json::array();
  for (std::size_t n = 0; n < p.values.size(); ++n) {
    vals.push_back(big_str(p.values[n]));
    exact.push_back(static_cast<bool>(p.exact[n]));
  }
  j["values"] = vals;
  j["exact"] = exact;
  return j;
}

inline std::string to_tsv(const GrowthProfile& p) {
  std::string out = "n\t" + std::string(profile_kind_name(p.kind)) + "\texact\n";
  for (std::size_t n = 0; n < p.values.size(); ++n)
    out += std::to_string(n) + "\t" + big_str(p.values[n]) + "\t" +
           (p.exact[n] ? "1" : "0") + "\n";
  return out;
}

inline Json to_json(const AffineTail& t) {
  return Json{{"onset", t.onset}, {"offset", t.offset}, {"slope", t.slope}};
}

inline Json to_json(const BalanceReport& r, const Alphabet& a) {
  return Json{{"max_discrepancy", r.max_discrepancy},
              {"witness_u", a.format(r.witness_u)},
              {"witness_v", a.format(r.witness_v)}};
}

inline Json to_json(const GraphStats& st, const Alphabet& a) {
  Json rf = Json::array(), lf = Json::array();
  for (const auto& w : st.right_forks) rf.push_back(a.format(w));
  for (const auto& w : st.left_forks) lf.push_back(a.format(w));
  return Json{{"k", st.k},
              {"vertices", st.n_vertices},
              {"edges", st.n_edges},
              {"strongly_connected", st.strongly_connected},
              {"right_forks", rf},
              {"left_forks", lf},
              {"simple_cycles_bounded", st.n_simple_cycles_bounded},
              {"cycle_cap_hit", st.cycle_cap_hit}};
}

inline const char* verdict_name(EvolutionVerdict v) {
  switch (v) {
    case EvolutionVerdict::LosesStrongConnectivity:
      return "loses_strong_connectivity";
    case EvolutionVerdict::StronglyConnectedThroughout:
      return "strongly_connected_throughout";
    case EvolutionVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

inline Json to_json(const EvolutionReport& rep, const Alphabet& a) {
  Json stats = Json::array();
  for (const auto& st : rep.stats) stats.push_back(to_json(st, a));
  return Json{{"verdict", verdict_name(rep.verdict)},
              {"k_event", rep.k_event},
              {"stats", stats}};
}

inline Json to_json(const GrowthClass& c) {
  Json j{{"class", growth_tag_name(c.tag)},
         {"certified", c.certified},
         {"evidence", c.evidence}};
  if (c.tag == GrowthClass::Tag::Boundary) j["offset"] = c.boundary_offset;
  if (c.tag == GrowthClass::Tag::SuperlinearPoly)
    j["poly_degree"] = c.poly_degree;
  return j;
}

inline Json to_json(const NormalBasisDescription& d, const Alphabet& a) {
  Json j;
  j["finite"] = Json::array();
  for (const auto& w : d.finite_part) j["finite"].push_back(a.format(w));
  j["left_rays"] = Json::array();
  for (const auto& l : d.left_rays)
    j["left_rays"].push_back({{"u", a.format(l.u)}, {"c", a.format(l.c)}});
  j["right_rays"] = Json::array();
  for (const auto& r : d.right_rays)
    j["right_rays"].push_back({{"d", a.format(r.d)}, {"v", a.format(r.v)}});
  j["pump"] = Json::array();
  for (const auto& p : d.pump_series)
    j["pump"].push_back({{"e", a.format(p.e)},
                         {"R", a.format(p.R)},
                         {"f", a.format(p.f)},
                         {"index_set", "full"}});
  if (d.two_ray)
    j["two_ray"] = {{"u", a.format(d.two_ray->u)},
                    {"c", a.format(d.two_ray->c)},
                    {"v", a.format(d.two_ray->v)}};
  else
    j["two_ray"] = nullptr;
  j["bridge"] = Json::array();
  for (const auto& b : d.bridge_series)
    j["bridge"].push_back({{"E", a.format(b.E)},
                           {"u", a.format(b.u)},
                           {"c", a.format(b.c)},
                           {"v", a.format(b.v)},
                           {"F", a.format(b.F)},
                           {"count_bound", b.count_bound}});
  return j;
}

inline Json to_json(const Antidictionary& anti, const Alphabet& a) {
  Json words = Json::array();
  for (const auto& w : anti.words) words.push_back(a.format(w));
  return Json{{"bound", anti.bound}, {"words", words}};
}

inline Json to_json(const DualityReport& r, const Alphabet& a) {
  Json j{{"ok", r.ok}, {"antidictionary", to_json(r.anti, a)}};
  if (!r.ok) {
    j["first_mismatch_length"] = r.first_mismatch_length;
    j["example"] = a.format(r.example);
    j["direction"] = r.missing ? "normal_word_absent" : "factor_not_normal";
  }
  return j;
}

inline Json to_json(const Case2Witness& w, const Alphabet& a) {
  Json table = Json::array();
  for (const auto& [v, n] : w.recurrence_table)
    table.push_back({{"v", a.format(v)}, {"N", n}});
  return Json{{"horizon", w.horizon},
              {"K", w.offset},
              {"uniform_recurrence_table", table},
              {"antidictionary_sample", to_json(w.anti, a)},
              {"duality_ok", w.duality_ok},
              {"inconclusive", w.inconclusive}};
}

// ---- coding specs ----------------------------------------------------------

inline Json to_json(const CodingSpec& spec) {
  Json part = Json::array();
  for (const auto& u : spec.partition) {
    Json arcs = Json::array();
    for (const auto& arc : u.arcs) {
      std::ostringstream lo, hi;
      lo << arc.lo;
      hi << arc.hi;
      arcs.push_back({lo.str(), hi.str()});
    }
    part.push_back(arcs);
  }
  Json syms = Json::array();
  for (std::size_t i = 0; i < spec.alphabet.size(); ++i)
    syms.push_back(spec.alphabet.symbol(static_cast<Sym>(i)));
  return Json{{"alpha", spec.alpha.str()},
              {"x0", spec.x0.str()},
              {"alphabet", syms},
              {"partition", part}};
}

inline CodingSpec coding_spec_from_json(const Json& j) {
  if (!j.contains("alpha") || !j.contains("x0") || !j.contains("alphabet") ||
      !j.contains("partition"))
    throw DataError("coding spec needs alpha, x0, alphabet, partition");
  std::vector<std::string> syms;
  for (const auto& s : j.at("alphabet")) syms.push_back(s.get<std::string>());
  CodingSpec spec{Angle::parse(j.at("alpha").get<std::string>()),
                  Angle::parse(j.at("x0").get<std::string>()),
                  Alphabet(syms),
                  {}};
  for (const auto& arcs : j.at("partition")) {
    ArcUnion u;
    for (const auto& arc : arcs) {
      if (!arc.is_array() || arc.size() != 2)
        throw DataError("arc must be a [lo, hi] pair");
      u.add(Angle::parse(arc.at(0).get<std::string>()).value,
            Angle::parse(arc.at(1).get<std::string>()).value);
    }
    spec.partition.push_back(u);
  }
  spec.validate();
  return spec;
}

}  // namespace growthlab
