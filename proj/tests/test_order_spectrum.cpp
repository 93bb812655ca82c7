#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "supergraphs/analytics.hpp"
#include "supergraphs/catalog.hpp"
#include "supergraphs/errors.hpp"
#include "supergraphs/order_spectrum.hpp"
#include "supergraphs/quotient.hpp"
#include "supergraphs/super_graph.hpp"

using namespace supergraphs;

namespace {

using Orders = std::vector<Order>;

Orders explicit_orders(GroupTable const& g) {
  std::set<Order> s(g.orders().begin(), g.orders().end());
  return {s.begin(), s.end()};
}

std::size_t vertex_of(OrderQuotientGraph const& q, Order d) {
  auto it = std::find(q.orders.begin(), q.orders.end(), d);
  REQUIRE(it != q.orders.end());
  return static_cast<std::size_t>(it - q.orders.begin());
}

DenseGraph reduced_delta_o(GroupTable const& g) {
  return reduced_graph(build(g, {BaseGraph::commuting, Relation::order}));
}

}  // namespace

TEST_CASE("minimal support") {
  CHECK(minimal_support(1, Family::symmetric) == 0);
  CHECK(minimal_support(6, Family::symmetric) == 5);
  CHECK(minimal_support(12, Family::symmetric) == 7);
  CHECK(minimal_support(6, Family::alternating) == 7);
  CHECK(minimal_support(4, Family::alternating) == 6);
  CHECK(minimal_support(15, Family::alternating) == 8);
}

TEST_CASE("symmetric spectra") {
  CHECK(spectrum_symmetric(5).orders == Orders{1, 2, 3, 4, 5, 6});
  auto s6 = spectrum_symmetric(6);
  CHECK_FALSE(s6.contains(7));
  CHECK(s6.contains(6));
  auto s4 = spectrum_symmetric(4);
  CHECK(s4.mu == Orders{3, 4});
  CHECK(s4.l == 1);
  CHECK(spectrum_symmetric(1).orders == Orders{1});
  CHECK_THROWS_AS(spectrum_symmetric(0), InvalidParameter);
  CHECK_THROWS_AS(spectrum_symmetric(61), BudgetExceeded);
  CHECK_THROWS_AS(spectrum_symmetric(30, 20), BudgetExceeded);
}

TEST_CASE("alternating spectra") {
  CHECK(spectrum_alternating(4).orders == Orders{1, 2, 3});
  CHECK(spectrum_alternating(5).orders == Orders{1, 2, 3, 5});
  CHECK(spectrum_alternating(7).contains(6));
  CHECK_THROWS_AS(spectrum_alternating(2), InvalidParameter);
  CHECK_THROWS_AS(spectrum_alternating(61), BudgetExceeded);
}

TEST_CASE("explicit spectra") {
  auto d14 = spectrum_explicit(make_dihedral(14));
  CHECK(d14.mu == Orders{2, 7});
  CHECK(d14.l == 1);
  auto d16 = spectrum_explicit(make_dihedral(16));
  CHECK(d16.mu == Orders{8});
  CHECK(d16.l == 8);
  auto q20 = spectrum_explicit(make_generalized_quaternion(20));
  CHECK(q20.mu == Orders{4, 10});
  CHECK(q20.l == 2);
  CHECK(dominant_orders(q20) == Orders{1, 2});
  CHECK(q20.class_sizes.size() == q20.orders.size());
  CHECK(std::accumulate(q20.class_sizes.begin(), q20.class_sizes.end(), std::uint64_t{0}) == 20);
  CHECK(q20.index_of(10) == q20.orders.size() - 1);
  CHECK_THROWS_AS(q20.index_of(3), InvalidParameter);
}

TEST_CASE("dominant orders of the symmetric and alternating families") {
  for (unsigned n = 4; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(dominant_orders(spectrum_symmetric(n)) == Orders{1});
    CHECK(dominant_orders(spectrum_alternating(n)) == Orders{1});
  }
}

TEST_CASE("order quotient graphs") {
  auto s5 = quotient_graph(spectrum_symmetric(5), true);
  auto five = vertex_of(s5, 5);
  CHECK(s5.adjacency.degree(five) == 0);
  auto blocks = quotient_component_orders(s5);
  CHECK(blocks == std::vector<Orders>{{2, 3, 4, 6}, {5}});

  CHECK(quotient_components(quotient_graph(spectrum_symmetric(9), true)).is_connected);

  auto d14 = quotient_graph(spectrum_explicit(make_dihedral(14)), true);
  CHECK(d14.orders == Orders{2, 7});
  CHECK(d14.adjacency.edge_count() == 0);
  CHECK(quotient_components(d14).sizes == std::vector<std::size_t>{6, 7});

  auto unreduced = quotient_graph(spectrum_symmetric(5), false);
  CHECK(unreduced.orders.front() == 1);
}

TEST_CASE("quotient diameters at known data points") {
  CHECK(quotient_diameter(quotient_graph(spectrum_symmetric(15), true)) == Diameter::finite(3));
  CHECK(quotient_diameter(quotient_graph(spectrum_symmetric(9), true)) == Diameter::finite(3));
  CHECK(quotient_diameter(quotient_graph(spectrum_alternating(10), true)) == Diameter::finite(3));
  CHECK(quotient_diameter(quotient_graph(spectrum_symmetric(7), true)).infinite);
  // Z1 reduced: nothing left.
  CHECK(quotient_diameter(quotient_graph(spectrum_explicit(make_cyclic(1)), true)) == Diameter::none());
}

TEST_CASE("closed-form connectivity") {
  CHECK(predict_connectivity(10, Family::symmetric) == ConnectivityPrediction{true, 1});
  CHECK(predict_connectivity(7, Family::symmetric) == ConnectivityPrediction{false, 2});
  CHECK(predict_connectivity(7, Family::alternating) == ConnectivityPrediction{false, 3});
  CHECK(predict_connectivity(4, Family::alternating) == ConnectivityPrediction{false, 2});
  CHECK(predict_connectivity(10, Family::alternating) == ConnectivityPrediction{true, 1});
  CHECK_THROWS_AS(predict_connectivity(3, Family::symmetric), HypothesisViolation);
  CHECK_THROWS_AS(predict_connectivity(8, Family::explicit_group), InvalidParameter);
}

TEST_CASE("family names") {
  CHECK(parse_family("symmetric") == Family::symmetric);
  CHECK(parse_family("alternating") == Family::alternating);
  CHECK(to_string(Family::alternating) == "alternating");
  CHECK_THROWS_AS(parse_family("dihedral"), InvalidParameter);
}

// ---------------------------------------------------------------------------
// Oracle equivalence

TEST_CASE("symbolic spectra match explicit groups up to degree 8") {
  for (unsigned n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(spectrum_symmetric(n).orders == explicit_orders(make_symmetric(n)));
    if (n >= 3) CHECK(spectrum_alternating(n).orders == explicit_orders(make_alternating(n)));
  }
}

TEST_CASE("symbolic spectra match integer partitions up to degree 60") {
  for (unsigned n = 1; n <= 60; ++n) {
    CAPTURE(n);
    auto sym = oracle::orders_by_partitions(n, false);
    CHECK(spectrum_symmetric(n).orders == Orders(sym.begin(), sym.end()));
    if (n >= 3) {
      auto alt = oracle::orders_by_partitions(n, true);
      CHECK(spectrum_alternating(n).orders == Orders(alt.begin(), alt.end()));
    }
  }
}

TEST_CASE("spectrum invariants") {
  std::vector<OrderSpectrum> spectra;
  for (unsigned n = 1; n <= 60; ++n) {
    spectra.push_back(spectrum_symmetric(n));
    if (n >= 3) spectra.push_back(spectrum_alternating(n));
  }
  for (auto const& entry : GroupCatalog::standard().entries())
    spectra.push_back(spectrum_explicit(entry.make()));

  for (auto const& s : spectra) {
    CAPTURE(s.label);
    CHECK(s.contains(1));
    CHECK(std::is_sorted(s.orders.begin(), s.orders.end()));
    for (auto d : s.orders)
      for (Order k = 1; k <= d; ++k)
        if (d % k == 0) REQUIRE(s.contains(k));
    for (auto d : s.orders) {
      bool maximal = std::none_of(s.orders.begin(), s.orders.end(),
                                  [&](Order e) { return e != d && e % d == 0; });
      CHECK(maximal == std::binary_search(s.mu.begin(), s.mu.end(), d));
    }
    Order expected_l = s.mu.size() == 1
                           ? s.mu.front()
                           : std::accumulate(s.mu.begin(), s.mu.end(), Order{0},
                                             [](Order a, Order b) { return std::gcd(a, b); });
    CHECK(s.l == expected_l);
    bool exponent_realized = false;
    try {
      exponent_realized = s.contains(s.exponent());
    } catch (BudgetExceeded const&) {
      // Every member of K fits in 64 bits, so an overflowing exponent is not one.
    }
    CHECK((s.mu.size() == 1) == exponent_realized);
  }
}

TEST_CASE("quotient fidelity against explicit reduced graphs") {
  auto compare = [](GroupTable const& g, OrderQuotientGraph const& q) {
    auto gr = reduced_delta_o(g);
    auto explicit_report = components(gr);
    auto q_report = quotient_components(q);
    CHECK(q_report.count == explicit_report.count);
    if (q.class_sizes_known()) CHECK(q_report.sizes == explicit_report.sizes);
    CHECK(quotient_diameter(q) == diameter(gr));
  };
  for (unsigned n = 4; n <= 7; ++n) {
    CAPTURE(n);
    compare(make_symmetric(n), quotient_graph(spectrum_symmetric(n), true));
    compare(make_alternating(n), quotient_graph(spectrum_alternating(n), true));
  }
  for (auto const& entry : GroupCatalog::standard().entries()) {
    auto g = entry.make();
    CAPTURE(entry.label);
    compare(g, quotient_graph(spectrum_explicit(g), true));
  }
}

TEST_CASE("reduced quotients stay within distance 2 of the smallest prime order") {
  for (auto f : {Family::symmetric, Family::alternating}) {
    for (unsigned n = 4; n <= 60; ++n) {
      if (!predict_connectivity(n, f).connected) continue;
      CAPTURE(n);
      auto q = quotient_graph(spectrum_for(f, n), true);
      Order hub = f == Family::symmetric ? 2 : 3;
      auto dist = bfs_distances(q.adjacency, vertex_of(q, hub));
      for (auto d : dist) CHECK(d <= 2);
    }
  }
}
