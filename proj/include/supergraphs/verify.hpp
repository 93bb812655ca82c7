#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "supergraphs/dense_graph.hpp"
#include "supergraphs/group.hpp"
#include "supergraphs/order_spectrum.hpp"
#include "supergraphs/super_graph.hpp"

namespace supergraphs {

// All nine super graphs of one group, indexed like all_graph_kinds().
struct SuperGraphSet {
  std::array<DenseGraph, 9> graphs;
  DenseGraph const& operator[](GraphKind k) const;
};
SuperGraphSet build_all(GroupTable const& g);

struct EqualityVerdict {
  GraphKind first;
  GraphKind second;
  bool graphs_equal = false;
  // Empty for pairs whose group condition is not implemented (reported only).
  std::optional<bool> predicted_condition;
  std::string condition_name;
  std::string theorem_id;  // "open" for uncharacterized pairs

  bool consistent() const { return !predicted_condition || *predicted_condition == graphs_equal; }
};

// The eighteen containment pairs: characterized pairs carry a prediction,
// prior-work pairs without a stated predicate and the five open pairs carry
// none.
std::vector<EqualityVerdict> verify_equality_theorems(GroupTable const& g);
std::vector<EqualityVerdict> verify_equality_theorems(GroupTable const& g, SuperGraphSet const& s);

struct CompletenessVerdict {
  GraphKind kind;
  bool complete = false;
  bool predicted = false;
  std::string condition_name;

  bool consistent() const { return complete == predicted; }
};

std::vector<CompletenessVerdict> verify_completeness(GroupTable const& g);
std::vector<CompletenessVerdict> verify_completeness(GroupTable const& g, SuperGraphSet const& s);

struct DominanceCheck {
  std::vector<Element> brute_force;  // dominant vertices of the order super commuting graph
  std::vector<Element> predicted;    // elements whose order divides l
  bool consistent() const { return brute_force == predicted; }
};

DominanceCheck verify_dominance(GroupTable const& g);
DominanceCheck verify_dominance(GroupTable const& g, DenseGraph const& order_commuting);

// Closed-form connectivity against the quotient, and diameter <= 3 when
// connected, for S_n / A_n with 4 <= n <= cap.
struct FamilyCheck {
  Family family;
  unsigned n;
  std::size_t predicted_components;
  std::size_t components;
  bool connected;
  std::size_t diameter;  // meaningful when connected

  bool consistent() const { return predicted_components == components && (!connected || diameter <= 3); }
};

std::vector<FamilyCheck> verify_family_connectivity(Family f, unsigned first, unsigned last);

}  // namespace supergraphs
