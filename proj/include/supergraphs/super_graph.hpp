#pragma once

#include <array>
#include <string>

#include "supergraphs/dense_graph.hpp"
#include "supergraphs/group.hpp"

namespace supergraphs {

enum class BaseGraph { power, enhanced_power, commuting };
enum class Relation { equality, conjugacy, order };

struct GraphKind {
  BaseGraph base;
  Relation relation;

  friend bool operator==(GraphKind, GraphKind) = default;
};

// Row-major listing: power, enhanced power, commuting; each with equality,
// conjugacy, order.
std::array<GraphKind, 9> all_graph_kinds();

std::string to_string(BaseGraph b);
std::string to_string(Relation r);
// Compact name such as "P", "Pe^c", "Delta^o".
std::string to_string(GraphKind k);
BaseGraph parse_base_graph(std::string const& s);  // throws InvalidParameter
Relation parse_relation(std::string const& s);

DenseGraph power_graph(GroupTable const& g);
DenseGraph enhanced_power_graph(GroupTable const& g);
DenseGraph commuting_graph(GroupTable const& g);

// x ~ y when x and y share a class, or some members of their classes are
// adjacent in base. Class-to-class adjacency is collected in one pass over
// the base edges and then expanded.
DenseGraph super_graph(DenseGraph const& base, Partition const& part);

Partition relation_partition(GroupTable const& g, Relation r);
DenseGraph base_graph(GroupTable const& g, BaseGraph b);
DenseGraph build(GroupTable const& g, GraphKind kind);

}  // namespace supergraphs
