#include "supergraphs/analytics.hpp"

#include <algorithm>
#include <limits>

#include "supergraphs/errors.hpp"

namespace supergraphs {

std::vector<std::size_t> dominant_vertices(DenseGraph const& gr) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < gr.size(); ++v)
    if (gr.degree(v) + 1 == gr.size()) out.push_back(v);
  return out;
}

DenseGraph reduced_graph(DenseGraph const& gr) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < gr.size(); ++v)
    if (gr.degree(v) + 1 != gr.size()) keep.push_back(v);
  return gr.induced_subgraph(keep);
}

namespace {

using Word = DenseGraph::Word;

// Frontier-at-a-time BFS over bitset rows; calls on_layer(depth, layer) for
// every non-empty layer after the source.
template <typename OnLayer>
void bitset_bfs(DenseGraph const& gr, std::size_t source, std::vector<Word>& visited,
                OnLayer&& on_layer) {
  std::size_t stride = gr.words_per_row();
  std::vector<Word> frontier(stride, 0), next(stride, 0);
  frontier[source / 64] |= Word{1} << (source % 64);
  visited[source / 64] |= Word{1} << (source % 64);
  for (std::size_t depth = 1;; ++depth) {
    std::fill(next.begin(), next.end(), 0);
    for_each_bit(std::span<Word const>(frontier), [&](std::size_t u) {
      auto r = gr.row(u);
      for (std::size_t w = 0; w < stride; ++w) next[w] |= r[w];
    });
    bool any = false;
    for (std::size_t w = 0; w < stride; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      any = any || next[w] != 0;
    }
    if (!any) return;
    on_layer(depth, std::span<Word const>(next));
    frontier.swap(next);
  }
}

}  // namespace

std::vector<std::size_t> component_ids(DenseGraph const& gr) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> id(gr.size(), unset);
  std::vector<Word> visited(gr.words_per_row(), 0);
  std::size_t next_id = 0;
  for (std::size_t v = 0; v < gr.size(); ++v) {
    if (id[v] != unset) continue;
    id[v] = next_id;
    bitset_bfs(gr, v, visited, [&](std::size_t, std::span<Word const> layer) {
      for_each_bit(layer, [&](std::size_t u) { id[u] = next_id; });
    });
    ++next_id;
  }
  return id;
}

ComponentReport components(DenseGraph const& gr) {
  auto ids = component_ids(gr);
  ComponentReport rep;
  for (auto c : ids) {
    if (c >= rep.sizes.size()) rep.sizes.resize(c + 1, 0);
    ++rep.sizes[c];
  }
  std::sort(rep.sizes.begin(), rep.sizes.end());
  rep.count = rep.sizes.size();
  rep.is_connected = rep.count <= 1;
  return rep;
}

std::vector<std::size_t> bfs_distances(DenseGraph const& gr, std::size_t source) {
  std::vector<std::size_t> dist(gr.size(), std::numeric_limits<std::size_t>::max());
  std::vector<Word> visited(gr.words_per_row(), 0);
  dist[source] = 0;
  bitset_bfs(gr, source, visited, [&](std::size_t depth, std::span<Word const> layer) {
    for_each_bit(layer, [&](std::size_t u) { dist[u] = depth; });
  });
  return dist;
}

Diameter diameter(DenseGraph const& gr) {
  if (gr.size() == 0) return Diameter::none();
  if (!components(gr).is_connected) return Diameter::infinity();
  std::size_t best = 0;
  std::vector<Word> visited(gr.words_per_row());
  for (std::size_t s = 0; s < gr.size(); ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::size_t ecc = 0;
    bitset_bfs(gr, s, visited, [&](std::size_t depth, std::span<Word const>) { ecc = depth; });
    best = std::max(best, ecc);
  }
  return Diameter::finite(best);
}

bool graphs_equal(DenseGraph const& a, DenseGraph const& b) {
  if (a.size() != b.size()) throw InvalidParameter("graphs have different vertex sets");
  return a.is_subgraph_of(b) && b.is_subgraph_of(a);
}

}  // namespace supergraphs
