#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace monodec {

struct WeightedEdge {
  std::size_t from;
  std::size_t to;
  std::int64_t weight = 1;
};

/// Directed multigraph with integer edge weights and optional vertex labels.
struct Digraph {
  std::size_t vertices = 0;
  std::vector<WeightedEdge> edges;
  std::vector<std::string> labels;
};

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> id;  // vertex -> component, in reverse topological order
};

/// Tarjan's algorithm, iterative.
Components strongly_connected_components(const Digraph& g);

/// gcd of the weights of all closed walks inside each component, combined
/// over components; 0 when no component carries a cycle of non-zero weight.
/// Uses spanning-tree potentials: for every intra-component edge u -> v of
/// weight w, |pot(u) + w - pot(v)| enters the gcd.
std::uint64_t closed_walk_gcd(const Digraph& g, const Components& c);

/// The same gcd for each component separately, indexed by component id.
std::vector<std::uint64_t> walk_gcd_per_component(const Digraph& g, const Components& c);

}  // namespace monodec
