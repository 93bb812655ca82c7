#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supergraphs/arith.hpp"
#include "supergraphs/order_spectrum.hpp"

namespace supergraphs {

// Two disjoint prime sets with exponents certifying that the reduced order
// super commuting graph of S_n (or A_n) has diameter 3: the first set fills
// n-1 or n points (n-2..n for A_n), the second fits in n points but cannot
// share the remainder with any prime of the first.
struct WitnessPair {
  Family family = Family::symmetric;
  unsigned n = 0;
  std::vector<Order> t1;
  std::vector<unsigned> alpha;
  std::vector<Order> t2;
  std::vector<unsigned> beta;

  friend bool operator==(WitnessPair const&, WitnessPair const&) = default;
};

// Points moved by cycles of lengths p^a, plus two more when the alternating
// family needs a second even cycle.
std::uint64_t prime_power_weight(std::vector<Order> const& primes,
                                 std::vector<unsigned> const& exponents, Family f);

bool is_valid_witness(WitnessPair const& w);
// Validated construction; throws InvalidParameter when a condition fails.
WitnessPair make_witness(Family f, unsigned n, std::vector<Order> t1, std::vector<unsigned> alpha,
                         std::vector<Order> t2, std::vector<unsigned> beta);

// Exhausts every prime-power pattern that fits in n points. Returns the
// witness with the lexicographically smallest first set (then exponents,
// then second set), or nullopt when none exists. Requires the reduced graph
// to be connected at n.
std::optional<WitnessPair> search_witness(unsigned n, Family f);

// "3^1*11^1"
std::string serialize_prime_powers(std::vector<Order> const& primes,
                                   std::vector<unsigned> const& exponents);

// Primes up to n (symmetric) or the same set with 2 replaced by 4 (alternating).
std::vector<Order> weight_primes(unsigned n, Family f);

struct TPrimeResult {
  std::vector<Order> primes;  // ascending
  bool used_fallback = false;
};

// For nonempty T from weight_primes(n, f) with sum(T) <= n, a nonempty
// disjoint T' from the same set with sum(T') <= n < sum(T) + sum(T').
// Follows the inductive construction (two largest primes, recursion on the
// remainder) with exhaustive search for n <= 10 and as a safety net.
TPrimeResult find_t_prime(unsigned n, std::vector<Order> const& t, Family f = Family::symmetric);
bool is_valid_t_prime(unsigned n, std::vector<Order> const& t, std::vector<Order> const& t_prime,
                      Family f = Family::symmetric);

// Number of primes p with floor(n/2) < p <= n.
std::size_t prime_window_count(unsigned n);
// Guaranteed lower bound on prime_window_count at n: 1, 2, ..., 7 from
// n >= 2, 11, 17, 29, 41, 47, 59. Zero below 2.
std::size_t prime_window_lower_bound(unsigned n);

}  // namespace supergraphs
