#pragma once

#include <vector>

#include "supergraphs/analytics.hpp"
#include "supergraphs/dense_graph.hpp"
#include "supergraphs/order_spectrum.hpp"

namespace supergraphs {

// The order super commuting graph collapsed to one vertex per element order:
// d1 ~ d2 iff lcm(d1, d2) lies in K. Vertex v stands for the clique of
// elements of order orders[v].
struct OrderQuotientGraph {
  Family family = Family::explicit_group;
  std::size_t n = 0;
  bool reduced = false;
  std::vector<Order> orders;
  DenseGraph adjacency;
  // Elements per order, aligned with `orders`; empty for symbolic families,
  // where every non-identity order class has at least two elements (n >= 3).
  std::vector<std::uint64_t> class_sizes;

  bool class_sizes_known() const noexcept { return !class_sizes.empty(); }
};

OrderQuotientGraph quotient_graph(OrderSpectrum const& s, bool reduced);

// Component structure of the element graph. Sizes count elements when class
// sizes are known and order classes otherwise.
ComponentReport quotient_components(OrderQuotientGraph const& q);
// The order values in each component, components ordered by smallest order.
std::vector<std::vector<Order>> quotient_component_orders(OrderQuotientGraph const& q);
// Diameter of the element graph: quotient distances between distinct orders,
// and distance 1 between distinct elements of one order.
Diameter quotient_diameter(OrderQuotientGraph const& q);

struct ConnectivityPrediction {
  bool connected = false;
  std::size_t components = 0;

  friend bool operator==(ConnectivityPrediction const&, ConnectivityPrediction const&) = default;
};

// Closed-form component count of the reduced order super commuting graph of
// S_n (neither n nor n-1 prime => connected, else two components) and A_n
// (none of n, n-1, n-2 prime => connected; three components when n and n-2
// are both prime; two otherwise). Requires n >= 4.
ConnectivityPrediction predict_connectivity(unsigned n, Family f);

}  // namespace supergraphs
