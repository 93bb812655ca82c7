#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "supergraphs/arith.hpp"

namespace supergraphs {

// A bijection on {0, ..., degree-1}. Products act left to right:
// (a * b)(i) = b(a(i)).
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  explicit Permutation(std::vector<Point> images);  // validates bijectivity

  static Permutation identity(std::size_t degree);
  // Cycles in 0-based points, e.g. from_cycles(4, {{0, 1, 2, 3}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::vector<Point> const& images() const noexcept { return images_; }

  Permutation operator*(Permutation const& rhs) const;
  Permutation inverse() const;

  bool is_identity() const noexcept;
  bool is_even() const;
  // Sorted descending, fixed points omitted.
  std::vector<std::size_t> cycle_type() const;
  Order order() const;

  // Raw bytes, usable as a hash key.
  std::string key() const;
  std::string to_string() const;  // cycle notation, "()" for identity

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace supergraphs
