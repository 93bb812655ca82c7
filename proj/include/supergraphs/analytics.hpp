#pragma once

#include <cstddef>
#include <vector>

#include "supergraphs/dense_graph.hpp"

namespace supergraphs {

struct ComponentReport {
  std::size_t count = 0;
  std::vector<std::size_t> sizes;  // ascending
  bool is_connected = true;        // vacuously true with no vertices

  friend bool operator==(ComponentReport const&, ComponentReport const&) = default;
};

// Diameter of a graph; `infinite` marks a disconnected graph and `empty` a
// graph with no vertices (value 0).
struct Diameter {
  std::size_t value = 0;
  bool infinite = false;
  bool empty = false;

  static Diameter finite(std::size_t v) { return {v, false, false}; }
  static Diameter infinity() { return {0, true, false}; }
  static Diameter none() { return {0, false, true}; }

  friend bool operator==(Diameter const&, Diameter const&) = default;
};

// Positions (not labels) of vertices adjacent to every other vertex.
std::vector<std::size_t> dominant_vertices(DenseGraph const& gr);
// Deletes the dominant vertices once; the survivors keep their labels.
DenseGraph reduced_graph(DenseGraph const& gr);

ComponentReport components(DenseGraph const& gr);
// Component id per vertex, numbered in order of first vertex.
std::vector<std::size_t> component_ids(DenseGraph const& gr);
Diameter diameter(DenseGraph const& gr);
// Eccentricity-style BFS distances from one source; unreachable = SIZE_MAX.
std::vector<std::size_t> bfs_distances(DenseGraph const& gr, std::size_t source);

bool graphs_equal(DenseGraph const& a, DenseGraph const& b);

}  // namespace supergraphs
