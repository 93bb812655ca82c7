#include "supergraphs/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "supergraphs/errors.hpp"

namespace supergraphs {

namespace {

std::vector<Element> build_table(std::size_t n, Multiplier const& rule) {
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[std::size_t{a} * n + b] = rule.mul(a, b);
  return table;
}

}  // namespace

GroupTable::GroupTable(std::string label, std::size_t size, std::shared_ptr<Multiplier const> rule)
    : label_(std::move(label)), size_(size), rule_(std::move(rule)) {
  if (size_ == 0) throw InvalidParameter("a group has at least one element");
  if (size_ <= kTableThreshold) table_ = build_table(size_, *rule_);
  order_.assign(size_, 0);
  inverse_.assign(size_, 0);
  for (Element a = 0; a < size_; ++a) {
    Element prev = 0;
    Element cur = a;
    Order k = 1;
    while (cur != 0) {
      prev = cur;
      cur = mul(cur, a);
      ++k;
      if (k > size_) throw InvalidParameter("multiplication rule is not a group on " + label_);
    }
    order_[a] = k;
    // a^{k-1} is the inverse; for a = e, prev stays e.
    inverse_[a] = (k == 1) ? 0 : prev;
  }
}

Element GroupTable::power(Element a, Order k) const {
  Element result = 0;
  Element base = a;
  k %= order_[a];
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<Element> GroupTable::cyclic_subgroup(Element a) const {
  std::vector<Element> out;
  out.reserve(order_[a]);
  Element cur = a;
  for (Order k = 0; k < order_[a]; ++k) {
    out.push_back(cur);
    cur = mul(cur, a);
  }
  return out;
}

GroupTable GroupTable::relabeled(std::string label) const {
  GroupTable copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

// ---------------------------------------------------------------------------
// Partitions and predicates

bool Partition::is_valid() const {
  std::vector<bool> seen(class_of.size(), false);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) return false;
    for (auto x : classes[c]) {
      if (x >= class_of.size() || seen[x] || class_of[x] != c) return false;
      seen[x] = true;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool Partition::refines(Partition const& other) const {
  if (other.size() != size()) return false;
  for (auto const& cls : classes)
    for (auto x : cls)
      if (other.class_of[x] != other.class_of[cls.front()]) return false;
  return true;
}

namespace {

template <typename KeyFn>
Partition partition_by(std::size_t n, KeyFn key) {
  Partition p;
  p.class_of.assign(n, 0);
  std::unordered_map<decltype(key(Element{0})), std::uint32_t> ids;
  for (Element x = 0; x < n; ++x) {
    auto [it, inserted] = ids.try_emplace(key(x), static_cast<std::uint32_t>(p.classes.size()));
    if (inserted) p.classes.emplace_back();
    p.class_of[x] = it->second;
    p.classes[it->second].push_back(x);
  }
  return p;
}

}  // namespace

Partition equality_partition(GroupTable const& g) {
  return partition_by(g.size(), [](Element x) { return x; });
}

Partition order_partition(GroupTable const& g) {
  return partition_by(g.size(), [&](Element x) { return g.order_of(x); });
}

Partition conjugacy_partition(GroupTable const& g) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  Partition p;
  p.class_of.assign(g.size(), unset);
  for (Element x = 0; x < g.size(); ++x) {
    if (p.class_of[x] != unset) continue;
    auto id = static_cast<std::uint32_t>(p.classes.size());
    p.classes.emplace_back();
    for (Element h = 0; h < g.size(); ++h) {
      Element c = g.mul(g.mul(h, x), g.inv(h));
      if (p.class_of[c] == unset) {
        p.class_of[c] = id;
        p.classes[id].push_back(c);
      }
    }
    std::sort(p.classes[id].begin(), p.classes[id].end());
  }
  return p;
}

bool in_cyclic_subgroup(GroupTable const& g, Element x, Element y) {
  auto contains = [&](Element gen, Element target) {
    // target lies in <gen> iff o(target) | o(gen) and it is the unique
    // element of that order there, i.e. gen^(o(gen)/o(target))^k for some k.
    if (g.order_of(gen) % g.order_of(target) != 0) return false;
    for (auto z : g.cyclic_subgroup(gen))
      if (z == target) return true;
    return false;
  };
  return contains(y, x) || contains(x, y);
}

Order exponent(GroupTable const& g) {
  Order e = 1;
  for (auto o : g.orders()) e = std::lcm(e, o);
  return e;
}

bool is_abelian(GroupTable const& g) {
  for (Element a = 0; a < g.size(); ++a)
    for (Element b = a + 1; b < g.size(); ++b)
      if (!g.commute(a, b)) return false;
  return true;
}

bool is_cyclic(GroupTable const& g) {
  auto o = g.orders();
  return std::find(o.begin(), o.end(), static_cast<Order>(g.size())) != o.end();
}

bool is_p_group(GroupTable const& g) { return g.size() == 1 || is_prime_power(g.size()); }

bool all_cyclic_subgroups_prime_power(GroupTable const& g) {
  for (auto o : g.orders())
    if (o != 1 && !is_prime_power(o)) return false;
  return true;
}

std::vector<Element> center(GroupTable const& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.size(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.size() && central; ++b) central = g.commute(a, b);
    if (central) z.push_back(a);
  }
  return z;
}

}  // namespace supergraphs
