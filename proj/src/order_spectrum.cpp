#include "supergraphs/order_spectrum.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>

#include "supergraphs/errors.hpp"

namespace supergraphs {

std::string to_string(Family f) {
  switch (f) {
    case Family::symmetric: return "symmetric";
    case Family::alternating: return "alternating";
    case Family::explicit_group: return "explicit";
  }
  return "?";
}

Family parse_family(std::string const& s) {
  if (s == "symmetric" || s == "S") return Family::symmetric;
  if (s == "alternating" || s == "A") return Family::alternating;
  throw InvalidParameter("unknown family '" + s + "' (expected symmetric or alternating)");
}

bool OrderSpectrum::contains(Order d) const {
  return std::binary_search(orders.begin(), orders.end(), d);
}

Order OrderSpectrum::exponent() const {
  Order e = 1;
  for (auto d : mu)
    if (!checked_mul(e / std::gcd(e, d), d, e))
      throw BudgetExceeded("exponent of " + label + " does not fit in 64 bits");
  return e;
}

std::size_t OrderSpectrum::index_of(Order d) const {
  auto it = std::lower_bound(orders.begin(), orders.end(), d);
  if (it == orders.end() || *it != d) throw InvalidParameter("order not in spectrum");
  return static_cast<std::size_t>(it - orders.begin());
}

std::uint64_t minimal_support(Order d, Family f) {
  std::uint64_t total = 0;
  for (auto [p, e] : factorize(d)) total += ipow(p, e);
  if (f == Family::alternating && d % 2 == 0) total += 2;
  return total;
}

namespace {

// Fills mu and l from a divisor-closed, sorted order set.
void finish(OrderSpectrum& s) {
  // K is closed under divisors, so the primes dividing its members are the
  // primes in K, and d is maximal iff no d*p lies in K.
  std::vector<Order> primes;
  std::copy_if(s.orders.begin(), s.orders.end(), std::back_inserter(primes), is_prime);
  s.mu.clear();
  for (auto d : s.orders) {
    bool maximal = std::none_of(primes.begin(), primes.end(), [&](Order p) {
      Order up = 0;
      return checked_mul(d, p, up) && s.contains(up);
    });
    if (maximal) s.mu.push_back(d);
  }
  s.l = s.mu.size() == 1 ? s.mu.front()
                         : std::accumulate(s.mu.begin(), s.mu.end(), Order{0},
                                           [](Order a, Order b) { return std::gcd(a, b); });
}

// Every product of prime powers whose cost stays within n. Each order has a
// single prime-power normal form, so the enumeration visits it exactly once.
std::vector<Order> realizable_orders(unsigned n, Family f) {
  std::map<Order, std::uint64_t> states{{1, 0}};
  for (auto p : primes_up_to(n)) {
    std::map<Order, std::uint64_t> next = states;
    for (auto [order, cost] : states) {
      for (Order q = p; q <= n; q *= p) {
        std::uint64_t c = cost + q + ((f == Family::alternating && p == 2) ? 2 : 0);
        if (c > n) break;
        next.emplace(order * q, c);
      }
    }
    states = std::move(next);
  }
  std::vector<Order> out;
  out.reserve(states.size());
  for (auto const& kv : states) out.push_back(kv.first);
  return out;
}

}  // namespace

OrderSpectrum spectrum_symmetric(unsigned n, unsigned cap) {
  if (n < 1) throw InvalidParameter("symmetric spectrum needs n >= 1");
  if (n > cap || n > kSpectrumCap)
    throw BudgetExceeded("S" + std::to_string(n) + " exceeds the spectrum cap");
  OrderSpectrum s;
  s.family = Family::symmetric;
  s.n = n;
  s.label = "S" + std::to_string(n);
  s.orders = realizable_orders(n, Family::symmetric);
  finish(s);
  return s;
}

OrderSpectrum spectrum_alternating(unsigned n, unsigned cap) {
  if (n < 3) throw InvalidParameter("alternating spectrum needs n >= 3");
  if (n > cap || n > kSpectrumCap)
    throw BudgetExceeded("A" + std::to_string(n) + " exceeds the spectrum cap");
  OrderSpectrum s;
  s.family = Family::alternating;
  s.n = n;
  s.label = "A" + std::to_string(n);
  s.orders = realizable_orders(n, Family::alternating);
  finish(s);
  return s;
}

OrderSpectrum spectrum_for(Family f, unsigned n, unsigned cap) {
  switch (f) {
    case Family::symmetric: return spectrum_symmetric(n, cap);
    case Family::alternating: return spectrum_alternating(n, cap);
    case Family::explicit_group: break;
  }
  throw InvalidParameter("spectrum_for needs the symmetric or alternating family");
}

OrderSpectrum spectrum_explicit(GroupTable const& g) {
  std::map<Order, std::uint64_t> counts;
  for (auto o : g.orders()) ++counts[o];
  OrderSpectrum s;
  s.family = Family::explicit_group;
  s.n = g.size();
  s.label = g.label();
  for (auto [o, c] : counts) {
    s.orders.push_back(o);
    s.class_sizes.push_back(c);
  }
  finish(s);
  return s;
}

std::vector<Order> dominant_orders(OrderSpectrum const& s) {
  std::vector<Order> out;
  for (auto d : s.orders)
    if (s.l % d == 0) out.push_back(d);
  return out;
}

}  // namespace supergraphs
