#include "supergraphs/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "supergraphs/errors.hpp"

namespace supergraphs {

namespace {

std::size_t parse_count(std::string_view digits, std::string const& label) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw InvalidParameter("malformed group label '" + label + "'");
  return value;
}

GroupTable atom_from_label(std::string_view atom, std::string const& label, std::size_t budget) {
  if (atom.size() < 2) throw InvalidParameter("malformed group label '" + label + "'");
  std::size_t n = parse_count(atom.substr(1), label);
  switch (atom[0]) {
    case 'Z':
      if (n > budget) throw BudgetExceeded("Z" + std::to_string(n) + " exceeds the explicit budget");
      return make_cyclic(n);
    case 'D':
      if (n > budget) throw BudgetExceeded("D" + std::to_string(n) + " exceeds the explicit budget");
      return make_dihedral(n);
    case 'Q':
      if (n > budget) throw BudgetExceeded("Q" + std::to_string(n) + " exceeds the explicit budget");
      return make_generalized_quaternion(n);
    case 'S':
      return make_symmetric(static_cast<unsigned>(std::min<std::size_t>(n, 1000)), budget);
    case 'A':
      return make_alternating(static_cast<unsigned>(std::min<std::size_t>(n, 1000)), budget);
    default:
      throw InvalidParameter("unknown group family in label '" + label + "'");
  }
}

std::string trim(std::string const& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupTable group_from_label(std::string const& label, std::size_t budget) {
  std::vector<std::string_view> atoms;
  std::string_view rest = label;
  while (true) {
    auto pos = rest.find('x');
    atoms.push_back(rest.substr(0, pos));
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  GroupTable g = atom_from_label(atoms[0], label, budget);
  for (std::size_t i = 1; i < atoms.size(); ++i)
    g = direct_product(g, atom_from_label(atoms[i], label, budget), budget);
  return g;
}

void GroupCatalog::add(std::string label, std::function<GroupTable()> make) {
  auto clash = std::any_of(entries_.begin(), entries_.end(),
                           [&](Entry const& e) { return e.label == label; });
  if (clash) throw InvalidParameter("duplicate catalog label '" + label + "'");
  entries_.push_back({std::move(label), std::move(make)});
}

void GroupCatalog::add_label(std::string const& label, std::size_t budget) {
  group_from_label(label, budget);
  add(label, [label, budget] { return group_from_label(label, budget); });
}

GroupCatalog GroupCatalog::standard() {
  GroupCatalog c;
  for (int n = 1; n <= 24; ++n) c.add_label("Z" + std::to_string(n));
  for (int n = 6; n <= 40; n += 2) c.add_label("D" + std::to_string(n));
  for (int n = 8; n <= 40; n += 4) c.add_label("Q" + std::to_string(n));
  for (int n = 3; n <= 7; ++n) c.add_label("S" + std::to_string(n));
  for (int n = 4; n <= 7; ++n) c.add_label("A" + std::to_string(n));
  for (char const* p : {"Z2xZ2", "Z2xZ2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ6", "S3xZ2", "S3xZ3",
                        "S3xS3", "A4xZ3", "D8xZ2", "Q8xZ2", "Q8xZ3", "D10xZ3", "S4xZ2"})
    c.add_label(p);
  return c;
}

GroupCatalog GroupCatalog::standard_up_to(std::size_t max_order) {
  GroupCatalog all = standard();
  GroupCatalog c;
  for (auto& e : all.entries_)
    if (e.make().size() <= max_order) c.entries_.push_back(e);
  return c;
}

GroupCatalog GroupCatalog::from_manifest(std::istream& in, std::size_t budget) {
  GroupCatalog c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto label = trim(line);
    if (label.empty() || label.front() == '#') continue;
    try {
      c.add_label(label, budget);
    } catch (InvalidParameter const& e) {
      throw InvalidParameter("manifest line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return c;
}

}  // namespace supergraphs
