#include "supergraphs/export.hpp"

namespace supergraphs {

void write_dot(std::ostream& out, DenseGraph const& gr, GroupTable const& g,
               std::string const& name) {
  out << "graph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < gr.size(); ++v)
    out << "  " << gr.label(v) << " [label=\"" << gr.label(v) << " (o=" << g.order_of(gr.label(v))
        << ")\"];\n";
  for (std::size_t u = 0; u < gr.size(); ++u)
    for_each_bit(gr.row(u), [&](std::size_t v) {
      if (u < v) out << "  " << gr.label(u) << " -- " << gr.label(v) << ";\n";
    });
  out << "}\n";
}

std::string adjacency_bits(DenseGraph const& gr) {
  std::string s;
  s.reserve(gr.size() * (gr.size() + 1));
  for (std::size_t u = 0; u < gr.size(); ++u) {
    for (std::size_t v = 0; v < gr.size(); ++v) s += gr.has_edge(u, v) ? '1' : '0';
    s += '\n';
  }
  return s;
}

nlohmann::json graph_json(DenseGraph const& gr, GroupTable const& g, std::string const& kind) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < gr.size(); ++v)
    vertices.push_back({{"element", gr.label(v)}, {"order", g.order_of(gr.label(v))}});
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t u = 0; u < gr.size(); ++u)
    for_each_bit(gr.row(u), [&](std::size_t v) {
      if (u < v) edges.push_back({gr.label(u), gr.label(v)});
    });
  return {{"group", g.label()}, {"graph", kind}, {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

nlohmann::json to_json(EqualityVerdict const& v, std::string const& label) {
  nlohmann::json j = {{"label", label},
                      {"pair", to_string(v.first) + "=" + to_string(v.second)},
                      {"equal", v.graphs_equal},
                      {"condition_name", v.condition_name},
                      {"theorem_id", v.theorem_id},
                      {"consistent", v.consistent()}};
  j["predicted"] = v.predicted_condition ? nlohmann::json(*v.predicted_condition) : nlohmann::json();
  return j;
}

nlohmann::json to_json(CompletenessVerdict const& v, std::string const& label) {
  return {{"label", label},          {"graph", to_string(v.kind)},
          {"complete", v.complete},  {"predicted", v.predicted},
          {"condition_name", v.condition_name}, {"consistent", v.consistent()}};
}

nlohmann::json to_json(OrderSpectrum const& s) {
  nlohmann::json j = {{"family", to_string(s.family)}, {"n", s.n},   {"label", s.label},
                      {"orders", s.orders},            {"mu", s.mu}, {"l", s.l},
                      {"dominant_orders", dominant_orders(s)}};
  if (!s.class_sizes.empty()) j["class_sizes"] = s.class_sizes;
  return j;
}

nlohmann::json to_json(FamilyCheck const& c) {
  nlohmann::json j = {{"family", to_string(c.family)},
                      {"n", c.n},
                      {"predicted_components", c.predicted_components},
                      {"components", c.components},
                      {"connected", c.connected},
                      {"consistent", c.consistent()}};
  if (c.connected) j["diameter"] = c.diameter;
  return j;
}

void write_verdict_csv_header(std::ostream& out) {
  out << "label,pair,equal,predicted,condition_name,theorem_id,consistent\n";
}

void write_verdict_csv(std::ostream& out, std::string const& label,
                       std::vector<EqualityVerdict> const& verdicts) {
  for (auto const& v : verdicts) {
    out << label << ',' << to_string(v.first) << '=' << to_string(v.second) << ','
        << (v.graphs_equal ? "true" : "false") << ','
        << (v.predicted_condition ? (*v.predicted_condition ? "true" : "false") : "") << ','
        << v.condition_name << ',' << v.theorem_id << ',' << (v.consistent() ? "true" : "false")
        << '\n';
  }
}

}  // namespace supergraphs
