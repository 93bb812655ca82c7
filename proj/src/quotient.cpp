#include "supergraphs/quotient.hpp"

#include <algorithm>
#include <numeric>

#include "supergraphs/errors.hpp"

namespace supergraphs {

OrderQuotientGraph quotient_graph(OrderSpectrum const& s, bool reduced) {
  OrderQuotientGraph q;
  q.family = s.family;
  q.n = s.n;
  q.reduced = reduced;
  for (std::size_t i = 0; i < s.orders.size(); ++i) {
    Order d = s.orders[i];
    if (reduced && s.l % d == 0) continue;
    q.orders.push_back(d);
    if (!s.class_sizes.empty()) q.class_sizes.push_back(s.class_sizes[i]);
  }
  q.adjacency = DenseGraph(q.orders.size());
  for (std::size_t i = 0; i < q.orders.size(); ++i)
    for (std::size_t j = i + 1; j < q.orders.size(); ++j) {
      Order m = std::lcm(q.orders[i], q.orders[j]);
      if (s.contains(m)) q.adjacency.add_edge(i, j);
    }
  return q;
}

ComponentReport quotient_components(OrderQuotientGraph const& q) {
  auto ids = component_ids(q.adjacency);
  ComponentReport rep;
  for (std::size_t v = 0; v < ids.size(); ++v) {
    if (ids[v] >= rep.sizes.size()) rep.sizes.resize(ids[v] + 1, 0);
    rep.sizes[ids[v]] += q.class_sizes_known() ? q.class_sizes[v] : 1;
  }
  std::sort(rep.sizes.begin(), rep.sizes.end());
  rep.count = rep.sizes.size();
  rep.is_connected = rep.count <= 1;
  return rep;
}

std::vector<std::vector<Order>> quotient_component_orders(OrderQuotientGraph const& q) {
  auto ids = component_ids(q.adjacency);
  std::vector<std::vector<Order>> out;
  for (std::size_t v = 0; v < ids.size(); ++v) {
    if (ids[v] >= out.size()) out.resize(ids[v] + 1);
    out[ids[v]].push_back(q.orders[v]);
  }
  return out;
}

Diameter quotient_diameter(OrderQuotientGraph const& q) {
  if (q.orders.empty()) return Diameter::none();
  if (!q.class_sizes_known() && q.n < 3)
    throw HypothesisViolation("symbolic diameter lift needs n >= 3");
  Diameter between = diameter(q.adjacency);
  if (between.infinite) return between;
  bool some_class_has_pair =
      !q.class_sizes_known() ||
      std::any_of(q.class_sizes.begin(), q.class_sizes.end(), [](auto c) { return c >= 2; });
  return Diameter::finite(std::max<std::size_t>(between.value, some_class_has_pair ? 1 : 0));
}

ConnectivityPrediction predict_connectivity(unsigned n, Family f) {
  if (n < 4) throw HypothesisViolation("connectivity prediction needs n >= 4");
  switch (f) {
    case Family::symmetric: {
      bool connected = !is_prime(n) && !is_prime(n - 1);
      return {connected, connected ? 1U : 2U};
    }
    case Family::alternating: {
      if (n == 4) return {false, 2};
      bool connected = !is_prime(n) && !is_prime(n - 1) && !is_prime(n - 2);
      if (connected) return {true, 1};
      return {false, (is_prime(n) && is_prime(n - 2)) ? 3U : 2U};
    }
    case Family::explicit_group: break;
  }
  throw InvalidParameter("prediction needs the symmetric or alternating family");
}

}  // namespace supergraphs
