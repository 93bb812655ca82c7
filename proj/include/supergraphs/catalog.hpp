#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "supergraphs/group.hpp"

namespace supergraphs {

// Parses `Z<n> | D<2n> | Q<4n> | S<n> | A<n> | <label>x<label>` and builds the
// group. Products associate to the left. Throws InvalidParameter on syntax
// errors and BudgetExceeded when the group is too large.
GroupTable group_from_label(std::string const& label, std::size_t budget = kDefaultBudget);

class GroupCatalog {
 public:
  struct Entry {
    std::string label;
    std::function<GroupTable()> make;
  };

  void add(std::string label, std::function<GroupTable()> make);
  void add_label(std::string const& label, std::size_t budget = kDefaultBudget);

  std::vector<Entry> const& entries() const& noexcept { return entries_; }
  // Lets `for (auto& e : GroupCatalog::standard().entries())` own the list.
  std::vector<Entry> entries() && { return std::move(entries_); }
  std::size_t size() const noexcept { return entries_.size(); }

  // Cyclic Z1..Z24, dihedral D6..D40, quaternion Q8..Q40, S3..S7, A4..A7 and
  // a dozen direct products.
  static GroupCatalog standard();
  // The groups of standard() with at most max_order elements.
  static GroupCatalog standard_up_to(std::size_t max_order);

  // One label per line; blank lines and lines starting with '#' are skipped.
  // Labels are validated eagerly; errors name the offending line.
  static GroupCatalog from_manifest(std::istream& in, std::size_t budget = kDefaultBudget);

 private:
  std::vector<Entry> entries_;
};

}  // namespace supergraphs
