#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace supergraphs {

using Order = std::uint64_t;

struct PrimePower {
  Order prime;
  unsigned exponent;

  friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

bool is_prime(std::uint64_t n);
std::vector<Order> primes_up_to(std::uint64_t n);

// Trial division; ascending primes.
std::vector<PrimePower> factorize(Order n);

bool is_prime_power(Order n);  // 1 is not a prime power
unsigned valuation(Order n, Order p);
Order ipow(Order base, unsigned exponent);

// Multiplication guarded against wrap-around; returns false on overflow.
bool checked_mul(Order a, Order b, Order& out);

}  // namespace supergraphs
