#include "supergraphs/witness.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "supergraphs/errors.hpp"
#include "supergraphs/quotient.hpp"

namespace supergraphs {

std::uint64_t prime_power_weight(std::vector<Order> const& primes,
                                 std::vector<unsigned> const& exponents, Family f) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    w += ipow(primes[i], exponents[i]);
    if (f == Family::alternating && primes[i] == 2) w += 2;
  }
  return w;
}

namespace {

bool disjoint(std::vector<Order> const& a, std::vector<Order> const& b) {
  for (auto p : a)
    if (std::find(b.begin(), b.end(), p) != b.end()) return false;
  return true;
}

// Smallest cycle length a prime of the first set forces on a shared element:
// p itself, or 4 for the prime 2 in the alternating family.
Order smallest_cost(std::vector<Order> const& t1, Family f) {
  Order best = ~Order{0};
  for (auto p : t1) best = std::min(best, (f == Family::alternating && p == 2) ? Order{4} : p);
  return best;
}

bool window_ok(std::uint64_t w, unsigned n, Family f) {
  std::uint64_t slack = f == Family::alternating ? 2 : 1;
  return w <= n && w + slack >= n;
}

bool well_formed_set(std::vector<Order> const& primes, std::vector<unsigned> const& exps,
                     unsigned n) {
  if (primes.empty() || primes.size() != exps.size()) return false;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]) || primes[i] > n || exps[i] == 0) return false;
    if (i > 0 && primes[i] <= primes[i - 1]) return false;
  }
  return true;
}

struct Pattern {
  std::vector<Order> primes;
  std::vector<unsigned> exps;
  std::uint64_t weight;
};

void enumerate_patterns(std::vector<Order> const& primes, std::size_t idx, unsigned n, Family f,
                        Pattern& cur, std::vector<Pattern>& out) {
  if (idx == primes.size()) {
    if (!cur.primes.empty()) out.push_back(cur);
    return;
  }
  enumerate_patterns(primes, idx + 1, n, f, cur, out);
  Order p = primes[idx];
  std::uint64_t extra = (f == Family::alternating && p == 2) ? 2 : 0;
  unsigned a = 1;
  for (Order q = p; cur.weight + q + extra <= n; q *= p, ++a) {
    cur.primes.push_back(p);
    cur.exps.push_back(a);
    cur.weight += q + extra;
    enumerate_patterns(primes, idx + 1, n, f, cur, out);
    cur.weight -= q + extra;
    cur.primes.pop_back();
    cur.exps.pop_back();
  }
}

}  // namespace

bool is_valid_witness(WitnessPair const& w) {
  if (w.family == Family::explicit_group || w.n < 4) return false;
  if (!well_formed_set(w.t1, w.alpha, w.n) || !well_formed_set(w.t2, w.beta, w.n)) return false;
  if (!disjoint(w.t1, w.t2)) return false;
  auto w1 = prime_power_weight(w.t1, w.alpha, w.family);
  auto w2 = prime_power_weight(w.t2, w.beta, w.family);
  if (!window_ok(w1, w.n, w.family) || w2 > w.n) return false;
  return w2 + smallest_cost(w.t1, w.family) > w.n;
}

WitnessPair make_witness(Family f, unsigned n, std::vector<Order> t1, std::vector<unsigned> alpha,
                         std::vector<Order> t2, std::vector<unsigned> beta) {
  WitnessPair w{f, n, std::move(t1), std::move(alpha), std::move(t2), std::move(beta)};
  if (!is_valid_witness(w))
    throw InvalidParameter("prime sets do not satisfy the diameter-3 witness conditions");
  return w;
}

std::optional<WitnessPair> search_witness(unsigned n, Family f) {
  if (!predict_connectivity(n, f).connected)
    throw HypothesisViolation("witness search needs a connected reduced graph");
  std::vector<Pattern> patterns;
  Pattern cur{{}, {}, 0};
  enumerate_patterns(primes_up_to(n), 0, n, f, cur, patterns);
  std::sort(patterns.begin(), patterns.end(), [](Pattern const& a, Pattern const& b) {
    return std::tie(a.primes, a.exps) < std::tie(b.primes, b.exps);
  });
  for (auto const& first : patterns) {
    if (!window_ok(first.weight, n, f)) continue;
    Order need = smallest_cost(first.primes, f);
    for (auto const& second : patterns) {
      if (second.weight + need <= n || !disjoint(first.primes, second.primes)) continue;
      return WitnessPair{f, n, first.primes, first.exps, second.primes, second.exps};
    }
  }
  return std::nullopt;
}

std::string serialize_prime_powers(std::vector<Order> const& primes,
                                   std::vector<unsigned> const& exponents) {
  std::ostringstream os;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i > 0) os << '*';
    os << primes[i] << '^' << exponents[i];
  }
  return os.str();
}

std::vector<Order> weight_primes(unsigned n, Family f) {
  auto primes = primes_up_to(n);
  if (f == Family::alternating) {
    primes.erase(std::remove(primes.begin(), primes.end(), Order{2}), primes.end());
    if (n >= 4) primes.insert(std::upper_bound(primes.begin(), primes.end(), Order{4}), Order{4});
  }
  return primes;
}

namespace {

Order sum_of(std::vector<Order> const& v) { return std::accumulate(v.begin(), v.end(), Order{0}); }

bool contains(std::vector<Order> const& v, Order x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::optional<std::vector<Order>> exhaustive_t_prime(unsigned n, std::vector<Order> const& t,
                                                     Family f) {
  std::vector<Order> pool;
  for (auto p : weight_primes(n, f))
    if (!contains(t, p)) pool.push_back(p);
  Order base = sum_of(t);
  std::optional<std::vector<Order>> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<Order> pick;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1U) pick.push_back(pool[i]);
    Order s = sum_of(pick);
    if (s <= n && base + s > n && (!best || pick < *best)) best = std::move(pick);
  }
  return best;
}

std::optional<std::vector<Order>> inductive_t_prime(unsigned k, std::vector<Order> const& t,
                                                    Family f) {
  if (k <= 10) return exhaustive_t_prime(k, t, f);
  Order small = f == Family::alternating ? 4 : 2;
  if (is_prime(k) || is_prime(k - 1)) {
    Order p = is_prime(k) ? k : k - 1;
    return std::vector<Order>{contains(t, p) ? small : p};
  }
  auto pool = weight_primes(k, f);
  Order p1 = pool[pool.size() - 1];
  Order p2 = pool[pool.size() - 2];
  if (contains(t, p1)) return std::vector<Order>{p2};
  if (contains(t, p2) || sum_of(t) >= k - p2) return std::vector<Order>{p1};
  auto rest = inductive_t_prime(static_cast<unsigned>(k - p2), t, f);
  if (!rest) return std::nullopt;
  rest->push_back(p2);
  std::sort(rest->begin(), rest->end());
  return rest;
}

}  // namespace

bool is_valid_t_prime(unsigned n, std::vector<Order> const& t, std::vector<Order> const& t_prime,
                      Family f) {
  if (t_prime.empty()) return false;
  auto pool = weight_primes(n, f);
  for (std::size_t i = 0; i < t_prime.size(); ++i) {
    if (!contains(pool, t_prime[i]) || contains(t, t_prime[i])) return false;
    if (i > 0 && t_prime[i] <= t_prime[i - 1]) return false;
  }
  Order s = sum_of(t_prime);
  return s <= n && sum_of(t) + s > n;
}

TPrimeResult find_t_prime(unsigned n, std::vector<Order> const& t, Family f) {
  if (n < 4) throw HypothesisViolation("T' construction needs n >= 4");
  if (f == Family::explicit_group) throw InvalidParameter("T' needs symmetric or alternating");
  auto pool = weight_primes(n, f);
  if (t.empty()) throw InvalidParameter("T must be nonempty");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!contains(pool, t[i]) || (i > 0 && t[i] <= t[i - 1]))
      throw InvalidParameter("T must be an ascending subset of the admissible primes");
  if (sum_of(t) > n) throw InvalidParameter("T sums past n");

  auto greedy = inductive_t_prime(n, t, f);
  if (greedy && is_valid_t_prime(n, t, *greedy, f)) return {*greedy, false};
  auto fallback = exhaustive_t_prime(n, t, f);
  if (!fallback) throw std::logic_error("no T' exists for n = " + std::to_string(n));
  return {*fallback, true};
}

std::size_t prime_window_count(unsigned n) {
  if (n < 2) throw InvalidParameter("prime window needs n >= 2");
  auto primes = primes_up_to(n);
  return static_cast<std::size_t>(std::count_if(primes.begin(), primes.end(),
                                                [&](Order p) { return p > n / 2; }));
}

std::size_t prime_window_lower_bound(unsigned n) {
  constexpr std::array<unsigned, 7> thresholds{2, 11, 17, 29, 41, 47, 59};
  return static_cast<std::size_t>(
      std::count_if(thresholds.begin(), thresholds.end(), [&](unsigned t) { return n >= t; }));
}

}  // namespace supergraphs
