#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "supergraphs/errors.hpp"
#include "supergraphs/group.hpp"

namespace supergraphs {

namespace {

class CyclicRule final : public Multiplier {
 public:
  explicit CyclicRule(std::size_t n) : n_(n) {}
  Element mul(Element a, Element b) const override {
    return static_cast<Element>((std::size_t{a} + b) % n_);
  }

 private:
  std::size_t n_;
};

// x^i y^j with y x = x^{-1} y and y^2 = x^{square_shift}; rotation order m.
class MetacyclicRule final : public Multiplier {
 public:
  MetacyclicRule(std::size_t m, std::size_t square_shift) : m_(m), shift_(square_shift) {}
  Element mul(Element a, Element b) const override {
    std::size_t i = a % m_, j = a / m_, k = b % m_, l = b / m_;
    std::size_t rot = (j == 0) ? (i + k) % m_ : (i + m_ - k) % m_;
    std::size_t refl = j + l;
    if (refl == 2) {
      rot = (rot + shift_) % m_;
      refl = 0;
    }
    return static_cast<Element>(rot + m_ * refl);
  }

 private:
  std::size_t m_, shift_;
};

class PermutationRule final : public Multiplier {
 public:
  explicit PermutationRule(std::shared_ptr<std::vector<Permutation> const> perms)
      : perms_(std::move(perms)) {
    index_.reserve(perms_->size());
    for (Element i = 0; i < perms_->size(); ++i) index_.emplace((*perms_)[i].key(), i);
  }
  Element mul(Element a, Element b) const override {
    auto it = index_.find(((*perms_)[a] * (*perms_)[b]).key());
    if (it == index_.end()) throw InvalidParameter("permutation set is not closed");
    return it->second;
  }
  bool commute(Element a, Element b) const override {
    auto const& x = (*perms_)[a].images();
    auto const& y = (*perms_)[b].images();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (y[x[i]] != x[y[i]]) return false;
    return true;
  }

 private:
  std::shared_ptr<std::vector<Permutation> const> perms_;
  std::unordered_map<std::string, Element> index_;
};

class ProductRule final : public Multiplier {
 public:
  ProductRule(GroupTable g, GroupTable h) : g_(std::move(g)), h_(std::move(h)) {}
  Element mul(Element a, Element b) const override {
    auto hs = static_cast<Element>(h_.size());
    return g_.mul(a / hs, b / hs) * hs + h_.mul(a % hs, b % hs);
  }
  bool commute(Element a, Element b) const override {
    auto hs = static_cast<Element>(h_.size());
    return g_.commute(a / hs, b / hs) && h_.commute(a % hs, b % hs);
  }

 private:
  GroupTable g_, h_;
};

std::size_t factorial_capped(unsigned n, std::size_t cap) {
  std::size_t f = 1;
  for (unsigned i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

std::vector<Permutation> all_permutations(unsigned n, bool even_only) {
  std::vector<Permutation::Point> im(n);
  std::iota(im.begin(), im.end(), Permutation::Point{0});
  std::vector<Permutation> out;
  do {
    Permutation p(im);
    if (!even_only || p.is_even()) out.push_back(std::move(p));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace

GroupTable make_cyclic(std::size_t n) {
  if (n == 0) throw InvalidParameter("cyclic group needs n >= 1");
  return GroupTable("Z" + std::to_string(n), n, std::make_shared<CyclicRule>(n));
}

GroupTable make_dihedral(std::size_t two_n) {
  if (two_n % 2 != 0 || two_n < 6)
    throw InvalidParameter("dihedral group D<2n> needs an even size >= 6");
  return GroupTable("D" + std::to_string(two_n), two_n,
                    std::make_shared<MetacyclicRule>(two_n / 2, 0));
}

GroupTable make_generalized_quaternion(std::size_t four_n) {
  if (four_n % 4 != 0 || four_n < 8)
    throw InvalidParameter("generalized quaternion group Q<4n> needs a multiple of 4, >= 8");
  std::size_t m = four_n / 2;
  return GroupTable("Q" + std::to_string(four_n), four_n,
                    std::make_shared<MetacyclicRule>(m, m / 2));
}

GroupTable make_symmetric(unsigned n, std::size_t budget) {
  if (n == 0) throw InvalidParameter("symmetric group needs n >= 1");
  if (n > kPermutationFamilyCap || factorial_capped(n, budget) > budget)
    throw BudgetExceeded("S" + std::to_string(n) + " exceeds the explicit budget");
  return make_permutation_group("S" + std::to_string(n), all_permutations(n, false));
}

GroupTable make_alternating(unsigned n, std::size_t budget) {
  if (n < 3) throw InvalidParameter("alternating group needs n >= 3");
  if (n > kPermutationFamilyCap || factorial_capped(n, 2 * budget) / 2 > budget)
    throw BudgetExceeded("A" + std::to_string(n) + " exceeds the explicit budget");
  return make_permutation_group("A" + std::to_string(n), all_permutations(n, true));
}

GroupTable direct_product(GroupTable const& g, GroupTable const& h, std::size_t budget) {
  if (g.size() > budget / h.size())
    throw BudgetExceeded(g.label() + "x" + h.label() + " exceeds the explicit budget");
  return GroupTable(g.label() + "x" + h.label(), g.size() * h.size(),
                    std::make_shared<ProductRule>(g, h));
}

GroupTable make_permutation_group(std::string label, std::vector<Permutation> elements) {
  if (elements.empty() || !elements.front().is_identity())
    throw InvalidParameter("permutation group must list the identity first");
  auto perms = std::make_shared<std::vector<Permutation> const>(std::move(elements));
  GroupTable g(std::move(label), perms->size(), std::make_shared<PermutationRule>(perms));
  g.perms_ = std::move(perms);
  return g;
}

GroupTable from_generators(std::vector<Permutation> const& generators, std::size_t degree,
                           std::size_t budget) {
  for (auto const& gen : generators)
    if (gen.degree() != degree) throw InvalidParameter("generator degree mismatch");
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<std::string, Element> seen{{elements[0].key(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (auto const& gen : generators) {
      Permutation next = elements[head] * gen;
      if (seen.try_emplace(next.key(), static_cast<Element>(elements.size())).second) {
        if (elements.size() + 1 > budget)
          throw BudgetExceeded("generated group exceeds the explicit budget");
        elements.push_back(std::move(next));
      }
    }
  }
  std::string label = "Perm" + std::to_string(degree) + "_" + std::to_string(elements.size());
  return make_permutation_group(std::move(label), std::move(elements));
}

GroupTable from_generators(std::vector<std::vector<Permutation::Point>> const& generator_images,
                           std::size_t degree, std::size_t budget) {
  std::vector<Permutation> gens;
  gens.reserve(generator_images.size());
  for (auto const& im : generator_images) gens.emplace_back(im);
  return from_generators(gens, degree, budget);
}

}  // namespace supergraphs
