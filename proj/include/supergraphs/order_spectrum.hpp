#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supergraphs/arith.hpp"
#include "supergraphs/group.hpp"

namespace supergraphs {

enum class Family { symmetric, alternating, explicit_group };

std::string to_string(Family f);
Family parse_family(std::string const& s);  // "symmetric" | "alternating"

// Largest degree handled symbolically. Orders stay far below 2^64 here.
inline constexpr unsigned kSpectrumCap = 60;

// The set K of element orders of a group, its divisibility-maximal members mu
// and l = gcd(mu) (or the sole member of mu).
struct OrderSpectrum {
  Family family = Family::explicit_group;
  std::size_t n = 0;  // degree for S_n/A_n, group size otherwise
  std::string label;
  std::vector<Order> orders;  // ascending, always contains 1
  std::vector<Order> mu;      // ascending
  Order l = 1;
  // Number of elements of each order, aligned with `orders`. Only known for
  // explicit groups; symbolic spectra leave it empty.
  std::vector<std::uint64_t> class_sizes;

  bool contains(Order d) const;
  // lcm of K; throws BudgetExceeded past 2^64 (S_n from n = 47 on).
  Order exponent() const;
  std::size_t index_of(Order d) const;  // throws if absent
};

// Fewest points a permutation (an even permutation for `alternating`) of
// order d must move: sum of p^v_p(d), plus 2 when d is even in the
// alternating case.
std::uint64_t minimal_support(Order d, Family f);

OrderSpectrum spectrum_symmetric(unsigned n, unsigned cap = kSpectrumCap);
OrderSpectrum spectrum_alternating(unsigned n, unsigned cap = kSpectrumCap);
OrderSpectrum spectrum_for(Family f, unsigned n, unsigned cap = kSpectrumCap);
OrderSpectrum spectrum_explicit(GroupTable const& g);

// Orders of the dominant vertices of the order super commuting graph:
// {d in K : d | l}.
std::vector<Order> dominant_orders(OrderSpectrum const& s);

}  // namespace supergraphs
