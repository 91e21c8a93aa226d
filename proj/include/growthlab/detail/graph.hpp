#pragma once

// Small graph helpers shared by the Rauzy and automaton layers.

#include <cstddef>
#include <utility>
#include <vector>

namespace growthlab::detail {

/// Tarjan SCC over an adjacency list; fills comp with a component id per
/// vertex and returns the number of components.
inline std::size_t scc_decompose(const std::vector<std::vector<std::size_t>>& adj,
                                 std::vector<int>& comp) {
  std::size_t n = adj.size();
  comp.assign(n, -1);
  std::vector<int> low(n, -1), idx(n, -1), on(n, 0);
  std::vector<std::size_t> stk;
  int counter = 0;
  std::size_t n_comp = 0;
  struct Frame {
    std::size_t v;
    std::size_t ei;
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (idx[s] != -1) continue;
    std::vector<Frame> call{{s, 0}};
    idx[s] = low[s] = counter++;
    stk.push_back(s);
    on[s] = 1;
    while (!call.empty()) {
      auto& fr = call.back();
      if (fr.ei < adj[fr.v].size()) {
        std::size_t w = adj[fr.v][fr.ei++];
        if (idx[w] == -1) {
          idx[w] = low[w] = counter++;
          stk.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[fr.v] = std::min(low[fr.v], idx[w]);
        }
      } else {
        if (low[fr.v] == idx[fr.v]) {
          while (true) {
            std::size_t w = stk.back();
            stk.pop_back();
            on[w] = 0;
            comp[w] = static_cast<int>(n_comp);
            if (w == fr.v) break;
          }
          ++n_comp;
        }
        std::size_t v = fr.v;
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return n_comp;
}

/// Count simple cycles by bounded DFS, each cycle counted at its least
/// vertex; stops once the cap is reached.
inline std::size_t count_simple_cycles(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t cap,
    bool& cap_hit) {
  std::size_t n = adj.size(), found = 0;
  cap_hit = false;
  std::vector<char> blocked(n, 0);
  for (std::size_t start = 0; start < n && !cap_hit; ++start) {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
    blocked[start] = 1;
    while (!stack.empty()) {
      auto& top = stack.back();
      std::size_t v = top.first;
      if (top.second < adj[v].size()) {
        std::size_t w = adj[v][top.second++];
        if (w == start) {
          if (++found >= cap) {
            cap_hit = true;
            break;
          }
        } else if (w > start && !blocked[w]) {
          blocked[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        blocked[v] = 0;
        stack.pop_back();
      }
    }
    for (auto& fr : stack) blocked[fr.first] = 0;
    blocked[start] = 0;
  }
  return found;
}

}  // namespace growthlab::detail
