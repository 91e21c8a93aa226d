#pragma once

// Rauzy k-graphs: vertices are the length-k factors, edges the
// length-(k+1) factors, plus the connectivity/fork statistics that drive
// the growth dichotomy.

#include <functional>
#include <map>

#include "complexity.hpp"
#include "detail/graph.hpp"
#include "infinite.hpp"

namespace growthlab {

struct RauzyGraph {
  std::size_t k = 0;
  std::vector<Word> vertices;  // sorted, index = vertex id
  struct Edge {
    std::size_t src, dst;
    Word label;  // the (k+1)-factor
  };
  std::vector<Edge> edges;

  std::size_t vertex_id(const Word& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w)
      throw ArgumentError("not a vertex of this Rauzy graph");
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

struct GraphStats {
  std::size_t k = 0;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  bool strongly_connected = false;
  std::vector<Word> right_forks;  // out-degree >= 2
  std::vector<Word> left_forks;   // in-degree >= 2
  std::size_t n_simple_cycles_bounded = 0;
  bool cycle_cap_hit = false;
};

inline RauzyGraph rauzy_graph(const FactorSet& f_k, const FactorSet& f_k1) {
  if (f_k1.n != f_k.n + 1)
    throw ArgumentError("factor sets must have consecutive lengths");
  RauzyGraph g;
  g.k = f_k.n;
  g.vertices.assign(f_k.words.begin(), f_k.words.end());
  for (const Word& w : f_k1.words) {
    Word pre(w.begin(), w.end() - 1);
    Word suf(w.begin() + 1, w.end());
    if (!f_k.contains(pre) || !f_k.contains(suf))
      throw DataError("inconsistent factor data: missing k-factor of length-" +
                      std::to_string(f_k1.n) + " word");
    g.edges.push_back({g.vertex_id(pre), g.vertex_id(suf), w});
  }
  return g;
}



inline GraphStats graph_stats(const RauzyGraph& g, std::size_t cycle_cap = 64) {
  GraphStats st;
  st.k = g.k;
  st.n_vertices = g.vertices.size();
  st.n_edges = g.edges.size();
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  std::vector<std::size_t> indeg(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    adj[e.src].push_back(e.dst);
    indeg[e.dst]++;
  }
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (adj[v].size() >= 2) st.right_forks.push_back(g.vertices[v]);
    if (indeg[v] >= 2) st.left_forks.push_back(g.vertices[v]);
  }
  std::vector<int> comp;
  st.strongly_connected = detail::scc_decompose(adj, comp) <= 1;
  st.n_simple_cycles_bounded =
      detail::count_simple_cycles(adj, cycle_cap, st.cycle_cap_hit);
  return st;
}

// ---- evolution -------------------------------------------------------------

enum class EvolutionVerdict {
  LosesStrongConnectivity,
  StronglyConnectedThroughout,
  Inconclusive
};

struct EvolutionReport {
  std::vector<GraphStats> stats;  // k = 1 .. k_max
  EvolutionVerdict verdict = EvolutionVerdict::Inconclusive;
  std::size_t k_event = 0;  // loss point, or first uncertain k
};

namespace detail {
inline EvolutionReport evolve(
    const std::function<FactorSet(std::size_t)>& factor_fn,
    const std::function<bool(std::size_t)>& exact_fn, std::size_t k_max,
    std::size_t cycle_cap) {
  EvolutionReport rep;
  FactorSet fk = factor_fn(1);
  for (std::size_t k = 1; k <= k_max; ++k) {
    FactorSet fk1 = factor_fn(k + 1);
    rep.stats.push_back(graph_stats(rauzy_graph(fk, fk1), cycle_cap));
    if (rep.verdict == EvolutionVerdict::Inconclusive && rep.k_event == 0) {
      if (!exact_fn(k + 1)) {
        rep.k_event = k;  // first uncertain k; verdict stays inconclusive
      } else if (!rep.stats.back().strongly_connected) {
        rep.verdict = EvolutionVerdict::LosesStrongConnectivity;
        rep.k_event = k;
      }
    }
    fk = std::move(fk1);
  }
  if (rep.verdict == EvolutionVerdict::Inconclusive && rep.k_event == 0)
    rep.verdict = EvolutionVerdict::StronglyConnectedThroughout;
  return rep;
}
}  // namespace detail

inline EvolutionReport evolution(const BiInfiniteSpec& spec, std::size_t k_max,
                                 std::size_t cycle_cap = 64) {
  return detail::evolve(
      [&](std::size_t n) { return exact_factor_set(spec, n); },
      [](std::size_t) { return true; }, k_max, cycle_cap);
}

inline EvolutionReport evolution(const Word& w, std::size_t k_max,
                                 std::size_t cycle_cap = 64) {
  return detail::evolve([&](std::size_t n) { return factors(w, n); },
                        [&](std::size_t n) { return n <= w.size() / 2; }, k_max,
                        cycle_cap);
}

inline std::string to_dot(const RauzyGraph& g, const Alphabet& a) {
  std::string out = "digraph rauzy_k" + std::to_string(g.k) + " {\n";
  for (const auto& v : g.vertices)
    out += "  \"" + (v.empty() ? std::string("eps") : a.format(v)) + "\";\n";
  for (const auto& e : g.edges)
    out += "  \"" + (g.vertices[e.src].empty() ? std::string("eps")
                                               : a.format(g.vertices[e.src])) +
           "\" -> \"" +
           (g.vertices[e.dst].empty() ? std::string("eps")
                                      : a.format(g.vertices[e.dst])) +
           "\" [label=\"" + a.format(e.label) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace growthlab
