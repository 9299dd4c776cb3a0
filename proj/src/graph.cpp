#include "monodec/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>

namespace monodec {

namespace {

std::vector<std::vector<std::size_t>> out_lists(const Digraph& g) {
  std::vector<std::vector<std::size_t>> out(g.vertices);
  for (std::size_t e = 0; e < g.edges.size(); ++e) out[g.edges[e].from].push_back(e);
  return out;
}

}  // namespace

Components strongly_connected_components(const Digraph& g) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const auto out = out_lists(g);
  std::vector<std::size_t> index(g.vertices, kUnvisited), low(g.vertices, 0);
  std::vector<bool> on_stack(g.vertices, false);
  std::vector<std::size_t> stack;
  Components result;
  result.id.assign(g.vertices, 0);
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next_edge;
  };
  for (std::size_t root = 0; root < g.vertices; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_edge < out[f.v].size()) {
        std::size_t w = g.edges[out[f.v][f.next_edge++]].to;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.id[w] = result.count;
        } while (w != v);
        ++result.count;
      }
    }
  }
  return result;
}

std::vector<std::uint64_t> walk_gcd_per_component(const Digraph& g, const Components& c) {
  const auto out = out_lists(g);
  std::vector<std::optional<std::int64_t>> pot(g.vertices);
  for (std::size_t root = 0; root < g.vertices; ++root) {
    if (pot[root]) continue;
    pot[root] = 0;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      for (std::size_t e : out[u]) {
        const auto& edge = g.edges[e];
        if (c.id[edge.to] != c.id[u] || pot[edge.to]) continue;
        pot[edge.to] = *pot[u] + edge.weight;
        queue.push(edge.to);
      }
    }
  }
  std::vector<std::uint64_t> gcd(c.count, 0);
  for (const auto& edge : g.edges) {
    std::size_t k = c.id[edge.from];
    if (c.id[edge.to] != k) continue;
    std::int64_t d = *pot[edge.from] + edge.weight - *pot[edge.to];
    gcd[k] = std::gcd(gcd[k], static_cast<std::uint64_t>(d < 0 ? -d : d));
  }
  return gcd;
}

std::uint64_t closed_walk_gcd(const Digraph& g, const Components& c) {
  std::uint64_t gcd = 0;
  for (auto v : walk_gcd_per_component(g, c)) gcd = std::gcd(gcd, v);
  return gcd;
}

}  // namespace monodec
