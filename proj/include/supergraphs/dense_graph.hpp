#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace supergraphs {

// Simple undirected graph with one bitset row per vertex. Vertex v carries
// label(v); for graphs on a group the label is the element index.
class DenseGraph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  DenseGraph() = default;
  explicit DenseGraph(std::size_t n);  // labels 0..n-1
  DenseGraph(std::size_t n, std::vector<std::uint32_t> labels);

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return stride_; }
  std::uint32_t label(std::size_t v) const { return labels_[v]; }
  std::vector<std::uint32_t> const& labels() const noexcept { return labels_; }

  bool has_edge(std::size_t u, std::size_t v) const {
    return (rows_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  // Symmetric; self-loops are ignored.
  void add_edge(std::size_t u, std::size_t v);
  std::span<Word const> row(std::size_t u) const {
    return {rows_.data() + u * stride_, stride_};
  }
  // Raw row access for builders; callers keep the matrix symmetric and loop-free.
  std::span<Word> mutable_row(std::size_t u) { return {rows_.data() + u * stride_, stride_}; }

  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t u) const;
  bool is_complete() const;
  // Checks symmetry and absence of loops.
  bool is_well_formed() const;
  // Every edge of *this is an edge of other (same vertex count).
  bool is_subgraph_of(DenseGraph const& other) const;

  // Vertices keep their labels.
  DenseGraph induced_subgraph(std::span<std::size_t const> vertices) const;

  friend bool operator==(DenseGraph const& a, DenseGraph const& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> rows_;
  std::vector<std::uint32_t> labels_;
};

// Visits the set bit positions of a row in increasing order.
template <typename Fn>
void for_each_bit(std::span<DenseGraph::Word const> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    DenseGraph::Word bits = row[w];
    while (bits != 0) {
      fn(w * DenseGraph::kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

}  // namespace supergraphs
