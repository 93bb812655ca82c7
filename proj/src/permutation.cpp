#include "supergraphs/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "supergraphs/errors.hpp"

namespace supergraphs {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidParameter("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const& cycles) {
  auto im = identity(degree).images_;
  std::vector<bool> used(degree, false);
  for (auto const& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]])
        throw InvalidParameter("cycles overlap or leave the degree");
      used[c[i]] = true;
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(Permutation const& rhs) const {
  if (rhs.degree() != degree())
    throw InvalidParameter("degree mismatch in permutation product");
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool Permutation::is_even() const {
  std::size_t even_cycles = 0;
  for (auto len : cycle_type())
    if (len % 2 == 0) ++even_cycles;
  return even_cycles % 2 == 0;
}

Order Permutation::order() const {
  Order o = 1;
  for (auto len : cycle_type()) o = std::lcm(o, static_cast<Order>(len));
  return o;
}

std::string Permutation::key() const {
  return {reinterpret_cast<char const*>(images_.data()), images_.size() * sizeof(Point)};
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) os << ' ';
      os << j;
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace supergraphs
