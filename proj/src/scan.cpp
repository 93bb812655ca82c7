#include "supergraphs/scan.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "supergraphs/errors.hpp"
#include "supergraphs/quotient.hpp"

namespace supergraphs {

ScanRow scan_one(Family f, unsigned n, unsigned cap) {
  if (n < 4) throw HypothesisViolation("scan covers n >= 4");
  auto q = quotient_graph(spectrum_for(f, n, cap), true);
  ScanRow row;
  row.family = f;
  row.n = n;
  auto comps = quotient_components(q);
  row.components = comps.count;
  row.connected = comps.is_connected;
  row.diameter = quotient_diameter(q);
  if (row.connected) {
    row.witness = search_witness(n, f);
    bool three = row.diameter.value == 3;
    row.counterexample = !three;
    row.witness_mismatch = row.witness.has_value() != three;
  }
  return row;
}

std::vector<ScanRow> conjecture_scan(Family f, unsigned first, unsigned last, unsigned workers,
                                     unsigned cap) {
  if (first > last) throw InvalidParameter("scan range is empty");
  if (last > cap) throw BudgetExceeded("scan range exceeds the spectrum cap");
  std::vector<ScanRow> rows(last - first + 1);
  std::atomic<unsigned> next{first};
  auto work = [&] {
    for (unsigned n = next++; n <= last; n = next++) rows[n - first] = scan_one(f, n, cap);
  };
  workers = std::max(1U, std::min(workers, last - first + 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  return rows;
}

void write_scan_csv(std::ostream& out, std::vector<ScanRow> const& rows) {
  out << "family,n,connected,components,diameter,witness_T1,alpha,witness_T2,beta\n";
  std::vector<unsigned> counterexamples, mismatches;
  for (auto const& r : rows) {
    out << to_string(r.family) << ',' << r.n << ',' << (r.connected ? "true" : "false") << ','
        << r.components << ',';
    if (r.diameter.infinite)
      out << "inf";
    else
      out << r.diameter.value;
    if (r.witness) {
      auto join = [](std::vector<unsigned> const& e) {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ";" : "") + std::to_string(e[i]);
        return s;
      };
      out << ',' << serialize_prime_powers(r.witness->t1, r.witness->alpha) << ','
          << join(r.witness->alpha) << ',' << serialize_prime_powers(r.witness->t2, r.witness->beta)
          << ',' << join(r.witness->beta);
    } else {
      out << ",,,,";
    }
    out << '\n';
    if (r.counterexample) counterexamples.push_back(r.n);
    if (r.witness_mismatch) mismatches.push_back(r.n);
  }
  auto list = [](std::vector<unsigned> const& v) {
    if (v.empty()) return std::string("none");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
  };
  auto connected = std::count_if(rows.begin(), rows.end(), [](auto const& r) { return r.connected; });
  out << "# summary: rows=" << rows.size() << " connected=" << connected
      << " counterexamples=" << list(counterexamples) << " witness_mismatches=" << list(mismatches)
      << '\n';
}

}  // namespace supergraphs
