#include "supergraphs/super_graph.hpp"

#include <algorithm>
#include <numeric>

#include "supergraphs/errors.hpp"

namespace supergraphs {

std::array<GraphKind, 9> all_graph_kinds() {
  std::array<GraphKind, 9> out{};
  std::size_t i = 0;
  for (auto b : {BaseGraph::power, BaseGraph::enhanced_power, BaseGraph::commuting})
    for (auto r : {Relation::equality, Relation::conjugacy, Relation::order}) out[i++] = {b, r};
  return out;
}

std::string to_string(BaseGraph b) {
  switch (b) {
    case BaseGraph::power: return "power";
    case BaseGraph::enhanced_power: return "enhanced_power";
    case BaseGraph::commuting: return "commuting";
  }
  return "?";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::equality: return "equality";
    case Relation::conjugacy: return "conjugacy";
    case Relation::order: return "order";
  }
  return "?";
}

std::string to_string(GraphKind k) {
  std::string s = k.base == BaseGraph::power            ? "P"
                  : k.base == BaseGraph::enhanced_power ? "Pe"
                                                        : "Delta";
  if (k.relation == Relation::conjugacy) s += "^c";
  if (k.relation == Relation::order) s += "^o";
  return s;
}

BaseGraph parse_base_graph(std::string const& s) {
  if (s == "power") return BaseGraph::power;
  if (s == "enhanced_power" || s == "enhanced-power") return BaseGraph::enhanced_power;
  if (s == "commuting") return BaseGraph::commuting;
  throw InvalidParameter("unknown graph '" + s + "'");
}

Relation parse_relation(std::string const& s) {
  if (s == "equality") return Relation::equality;
  if (s == "conjugacy") return Relation::conjugacy;
  if (s == "order") return Relation::order;
  throw InvalidParameter("unknown relation '" + s + "'");
}

DenseGraph power_graph(GroupTable const& g) {
  DenseGraph gr(g.size());
  for (Element y = 0; y < g.size(); ++y)
    for (auto x : g.cyclic_subgroup(y)) gr.add_edge(x, y);
  return gr;
}

DenseGraph enhanced_power_graph(GroupTable const& g) {
  DenseGraph gr(g.size());
  for (Element z = 0; z < g.size(); ++z) {
    auto sub = g.cyclic_subgroup(z);
    // Each cyclic subgroup is handled once, from its smallest generator.
    Order o = g.order_of(z);
    bool smallest = true;
    for (Order k = 1; k <= o && smallest; ++k)
      if (std::gcd(k, o) == 1 && sub[k - 1] < z) smallest = false;
    if (!smallest) continue;
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j) gr.add_edge(sub[i], sub[j]);
  }
  return gr;
}

DenseGraph commuting_graph(GroupTable const& g) {
  DenseGraph gr(g.size());
  for (Element a = 0; a < g.size(); ++a)
    for (Element b = a + 1; b < g.size(); ++b)
      if (g.commute(a, b)) gr.add_edge(a, b);
  return gr;
}

DenseGraph super_graph(DenseGraph const& base, Partition const& part) {
  if (part.size() != base.size()) throw InvalidParameter("partition does not match graph");
  std::size_t n = base.size();
  std::size_t k = part.classes.size();

  std::vector<DenseGraph::Word> class_mask(k * base.words_per_row(), 0);
  auto mask = [&](std::size_t c) {
    return std::span<DenseGraph::Word>(class_mask.data() + c * base.words_per_row(),
                                       base.words_per_row());
  };
  for (std::size_t c = 0; c < k; ++c)
    for (auto x : part.classes[c]) mask(c)[x / 64] |= DenseGraph::Word{1} << (x % 64);

  // Class-pair adjacency: c ~ d when some vertex of c has a base neighbour in d.
  std::vector<std::vector<bool>> class_adj(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) {
    class_adj[c][c] = true;
    for (auto x : part.classes[c]) {
      auto r = base.row(x);
      for (std::size_t d = 0; d < k; ++d) {
        if (class_adj[c][d]) continue;
        auto m = mask(d);
        for (std::size_t w = 0; w < r.size(); ++w)
          if (r[w] & m[w]) {
            class_adj[c][d] = class_adj[d][c] = true;
            break;
          }
      }
    }
  }

  DenseGraph out(n, base.labels());
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<DenseGraph::Word> row(base.words_per_row(), 0);
    for (std::size_t d = 0; d < k; ++d) {
      if (!class_adj[c][d]) continue;
      auto m = mask(d);
      for (std::size_t w = 0; w < row.size(); ++w) row[w] |= m[w];
    }
    for (auto x : part.classes[c]) {
      auto dst = out.mutable_row(x);
      std::copy(row.begin(), row.end(), dst.begin());
      dst[x / 64] &= ~(DenseGraph::Word{1} << (x % 64));
    }
  }
  return out;
}

Partition relation_partition(GroupTable const& g, Relation r) {
  switch (r) {
    case Relation::equality: return equality_partition(g);
    case Relation::conjugacy: return conjugacy_partition(g);
    case Relation::order: return order_partition(g);
  }
  throw InvalidParameter("unknown relation");
}

DenseGraph base_graph(GroupTable const& g, BaseGraph b) {
  switch (b) {
    case BaseGraph::power: return power_graph(g);
    case BaseGraph::enhanced_power: return enhanced_power_graph(g);
    case BaseGraph::commuting: return commuting_graph(g);
  }
  throw InvalidParameter("unknown base graph");
}

DenseGraph build(GroupTable const& g, GraphKind kind) {
  DenseGraph base = base_graph(g, kind.base);
  if (kind.relation == Relation::equality) return base;
  return super_graph(base, relation_partition(g, kind.relation));
}

}  // namespace supergraphs
