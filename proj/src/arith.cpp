#include "supergraphs/arith.hpp"

namespace supergraphs {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<Order> primes_up_to(std::uint64_t n) {
  std::vector<Order> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<PrimePower> factorize(Order n) {
  std::vector<PrimePower> out;
  for (Order p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime_power(Order n) { return n > 1 && factorize(n).size() == 1; }

unsigned valuation(Order n, Order p) {
  unsigned e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

Order ipow(Order base, unsigned exponent) {
  Order r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

bool checked_mul(Order a, Order b, Order& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

}  // namespace supergraphs
