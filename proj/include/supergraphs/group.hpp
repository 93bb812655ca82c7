#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "supergraphs/arith.hpp"
#include "supergraphs/permutation.hpp"

namespace supergraphs {

using Element = std::uint32_t;

// Largest group materialized element by element (covers S8 and A8).
inline constexpr std::size_t kDefaultBudget = 45000;
// Groups up to this size keep a full multiplication table.
inline constexpr std::size_t kTableThreshold = 4096;
// Largest degree accepted by make_symmetric / make_alternating.
inline constexpr unsigned kPermutationFamilyCap = 8;

// Multiplication rule behind a GroupTable. Elements are 0..size-1.
class Multiplier {
 public:
  virtual ~Multiplier() = default;
  virtual Element mul(Element a, Element b) const = 0;
  virtual bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
};

// A finite group on the indices 0..size()-1 with identity 0. Immutable after
// construction; element orders and inverses are cached.
class GroupTable {
 public:
  GroupTable(std::string label, std::size_t size, std::shared_ptr<Multiplier const> rule);

  std::string const& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return size_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const {
    return table_.empty() ? rule_->mul(a, b) : table_[std::size_t{a} * size_ + b];
  }
  bool commute(Element a, Element b) const {
    return table_.empty() ? rule_->commute(a, b)
                          : table_[std::size_t{a} * size_ + b] == table_[std::size_t{b} * size_ + a];
  }
  Element inv(Element a) const { return inverse_[a]; }
  Order order_of(Element a) const { return order_[a]; }
  std::span<Order const> orders() const noexcept { return order_; }

  Element power(Element a, Order k) const;
  // Elements of <a> as a, a^2, ..., a^{o(a)} = e.
  std::vector<Element> cyclic_subgroup(Element a) const;

  bool has_table() const noexcept { return !table_.empty(); }
  // Set for groups built from permutations; index i is element i.
  std::shared_ptr<std::vector<Permutation> const> permutations() const noexcept {
    return perms_;
  }

  // Re-labels a copy (used by the catalog for display names).
  GroupTable relabeled(std::string label) const;

 private:
  friend GroupTable make_permutation_group(std::string, std::vector<Permutation>);

  std::string label_;
  std::size_t size_;
  std::shared_ptr<Multiplier const> rule_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Order> order_;
  std::shared_ptr<std::vector<Permutation> const> perms_;
};

// Families. Indexing per family:
//   Z<n>:   element i is i (mod n).
//   D<2n>:  x^i y^j at index i + n*j, x rotation of order n, y reflection.
//   Q<4n>:  x^i y^j at index i + 2n*j, x of order 2n, y^2 = x^n.
//   S<n>, A<n>: permutations in lexicographic order of their image arrays.
//   GxH:    (g, h) at index g*|H| + h.
GroupTable make_cyclic(std::size_t n);
GroupTable make_dihedral(std::size_t two_n);
GroupTable make_generalized_quaternion(std::size_t four_n);
GroupTable make_symmetric(unsigned n, std::size_t budget = kDefaultBudget);
GroupTable make_alternating(unsigned n, std::size_t budget = kDefaultBudget);
GroupTable direct_product(GroupTable const& g, GroupTable const& h,
                          std::size_t budget = kDefaultBudget);
// Closure by breadth-first right multiplication, identity first.
GroupTable from_generators(std::vector<Permutation> const& generators, std::size_t degree,
                           std::size_t budget = kDefaultBudget);
GroupTable from_generators(std::vector<std::vector<Permutation::Point>> const& generator_images,
                           std::size_t degree, std::size_t budget = kDefaultBudget);
// Elements given as distinct permutations closed under composition; the
// identity must come first.
GroupTable make_permutation_group(std::string label, std::vector<Permutation> elements);

// An equivalence partition of the element set.
struct Partition {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<Element>> classes;

  std::size_t size() const noexcept { return class_of.size(); }
  bool is_valid() const;
  // True when every class of *this lies inside a class of other.
  bool refines(Partition const& other) const;
};

Partition equality_partition(GroupTable const& g);
Partition conjugacy_partition(GroupTable const& g);
Partition order_partition(GroupTable const& g);

bool in_cyclic_subgroup(GroupTable const& g, Element x, Element y);
Order exponent(GroupTable const& g);
bool is_abelian(GroupTable const& g);
bool is_cyclic(GroupTable const& g);
bool is_p_group(GroupTable const& g);  // the trivial group counts
bool all_cyclic_subgroups_prime_power(GroupTable const& g);
std::vector<Element> center(GroupTable const& g);

}  // namespace supergraphs
