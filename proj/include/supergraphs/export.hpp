#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "supergraphs/dense_graph.hpp"
#include "supergraphs/group.hpp"
#include "supergraphs/order_spectrum.hpp"
#include "supergraphs/quotient.hpp"
#include "supergraphs/verify.hpp"

namespace supergraphs {

// Undirected DOT; each node is labelled "<element> (o=<order>)".
void write_dot(std::ostream& out, DenseGraph const& gr, GroupTable const& g,
               std::string const& name = "G");
// One line of '0'/'1' per vertex, row-major.
std::string adjacency_bits(DenseGraph const& gr);

nlohmann::json graph_json(DenseGraph const& gr, GroupTable const& g, std::string const& kind);
nlohmann::json to_json(EqualityVerdict const& v, std::string const& label);
nlohmann::json to_json(CompletenessVerdict const& v, std::string const& label);
nlohmann::json to_json(OrderSpectrum const& s);
nlohmann::json to_json(FamilyCheck const& c);

// label,pair,equal,predicted,condition_name,theorem_id,consistent
void write_verdict_csv_header(std::ostream& out);
void write_verdict_csv(std::ostream& out, std::string const& label,
                       std::vector<EqualityVerdict> const& verdicts);

}  // namespace supergraphs
