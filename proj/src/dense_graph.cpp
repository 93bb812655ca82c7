#include "supergraphs/dense_graph.hpp"

#include <numeric>

#include "supergraphs/errors.hpp"

namespace supergraphs {

DenseGraph::DenseGraph(std::size_t n) : DenseGraph(n, {}) {}

DenseGraph::DenseGraph(std::size_t n, std::vector<std::uint32_t> labels)
    : n_(n), stride_((n + kWordBits - 1) / kWordBits), rows_(n * stride_, 0), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), 0U);
  } else if (labels_.size() != n) {
    throw InvalidParameter("label count differs from vertex count");
  }
}

void DenseGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  rows_[u * stride_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  rows_[v * stride_ + u / kWordBits] |= Word{1} << (u % kWordBits);
}

std::size_t DenseGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t DenseGraph::edge_count() const {
  std::size_t total = 0;
  for (auto w : rows_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::vector<std::size_t> DenseGraph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  for_each_bit(row(u), [&](std::size_t v) { out.push_back(v); });
  return out;
}

bool DenseGraph::is_complete() const {
  for (std::size_t u = 0; u < n_; ++u)
    if (degree(u) + 1 != n_) return false;
  return true;
}

bool DenseGraph::is_well_formed() const {
  for (std::size_t u = 0; u < n_; ++u) {
    if (has_edge(u, u)) return false;
    bool symmetric = true;
    for_each_bit(row(u), [&](std::size_t v) { symmetric = symmetric && v < n_ && has_edge(v, u); });
    if (!symmetric) return false;
  }
  return true;
}

bool DenseGraph::is_subgraph_of(DenseGraph const& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if ((rows_[i] & ~other.rows_[i]) != 0) return false;
  return true;
}

DenseGraph DenseGraph::induced_subgraph(std::span<std::size_t const> vertices) const {
  std::vector<std::uint32_t> labels;
  labels.reserve(vertices.size());
  for (auto v : vertices) labels.push_back(labels_[v]);
  DenseGraph sub(vertices.size(), std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) sub.add_edge(i, j);
  return sub;
}

}  // namespace supergraphs
