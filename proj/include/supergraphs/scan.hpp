#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "supergraphs/analytics.hpp"
#include "supergraphs/order_spectrum.hpp"
#include "supergraphs/witness.hpp"

namespace supergraphs {

struct ScanRow {
  Family family = Family::symmetric;
  unsigned n = 0;
  std::size_t components = 0;
  bool connected = false;
  Diameter diameter;
  std::optional<WitnessPair> witness;  // searched only when connected
  // Connected with a diameter other than 3.
  bool counterexample = false;
  // Witness existence disagrees with diameter == 3.
  bool witness_mismatch = false;
};

// Quotient analysis of the reduced order super commuting graph for each n in
// [first, last]; rows come back ordered by n regardless of worker count.
std::vector<ScanRow> conjecture_scan(Family f, unsigned first, unsigned last, unsigned workers = 1,
                                     unsigned cap = kSpectrumCap);
ScanRow scan_one(Family f, unsigned n, unsigned cap = kSpectrumCap);

// `family,n,connected,components,diameter,witness_T1,alpha,witness_T2,beta`
// then one row per n and a closing `# summary` line.
void write_scan_csv(std::ostream& out, std::vector<ScanRow> const& rows);

}  // namespace supergraphs
