// Command line front end: build graphs, verify the characterizations over a
// catalog, inspect order spectra and scan S_n / A_n.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
// 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "supergraphs/analytics.hpp"
#include "supergraphs/catalog.hpp"
#include "supergraphs/errors.hpp"
#include "supergraphs/export.hpp"
#include "supergraphs/quotient.hpp"
#include "supergraphs/scan.hpp"
#include "supergraphs/super_graph.hpp"
#include "supergraphs/verify.hpp"
#include "supergraphs/witness.hpp"

namespace sg = supergraphs;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::string group;
  std::vector<std::string> groups;
  std::string catalog_path;
  std::string graph = "commuting";
  std::string relation = "equality";
  bool reduced = false;
  std::string format;
  std::string output;
  std::size_t budget = sg::kDefaultBudget;
  unsigned spectrum_cap = sg::kSpectrumCap;
  unsigned workers = 1;
  std::string family = "symmetric";
  unsigned n = 0;
  unsigned first = 4;
  unsigned last = 20;
  unsigned family_last = 0;
};

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(std::string const& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw sg::InvalidParameter("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_build(RunConfig const& cfg) {
  auto g = sg::group_from_label(cfg.group, cfg.budget);
  sg::GraphKind kind{sg::parse_base_graph(cfg.graph), sg::parse_relation(cfg.relation)};
  auto gr = sg::build(g, kind);
  if (cfg.reduced) gr = sg::reduced_graph(gr);
  std::string name = sg::to_string(kind) + "(" + g.label() + ")" + (cfg.reduced ? "*" : "");
  Sink sink(cfg.output);
  auto format = cfg.format.empty() ? "dot" : cfg.format;
  if (format == "dot") {
    sg::write_dot(sink.stream(), gr, g, name);
  } else if (format == "json") {
    auto j = sg::graph_json(gr, g, name);
    auto comps = sg::components(gr);
    j["components"] = comps.sizes;
    auto d = sg::diameter(gr);
    j["diameter"] = d.infinite ? nlohmann::json("inf") : nlohmann::json(d.value);
    sink.stream() << j.dump(2) << '\n';
  } else if (format == "bits") {
    sink.stream() << sg::adjacency_bits(gr);
  } else {
    throw sg::InvalidParameter("unknown format '" + format + "'");
  }
  return 0;
}

sg::GroupCatalog load_catalog(RunConfig const& cfg) {
  if (!cfg.catalog_path.empty()) {
    std::ifstream in(cfg.catalog_path);
    if (!in) throw sg::InvalidParameter("cannot read catalog " + cfg.catalog_path);
    return sg::GroupCatalog::from_manifest(in, cfg.budget);
  }
  if (!cfg.groups.empty()) {
    sg::GroupCatalog c;
    for (auto const& label : cfg.groups) c.add_label(label, cfg.budget);
    return c;
  }
  return sg::GroupCatalog::standard();
}

int cmd_verify(RunConfig const& cfg) {
  auto catalog = load_catalog(cfg);
  auto format = cfg.format.empty() ? "json" : cfg.format;
  nlohmann::json report = {{"groups", nlohmann::json::array()}, {"families", nlohmann::json::array()}};
  nlohmann::json mismatches = nlohmann::json::array();
  Sink sink(cfg.output);
  if (format == "csv") sg::write_verdict_csv_header(sink.stream());

  for (auto const& entry : catalog.entries()) {
    auto g = entry.make();
    auto graphs = sg::build_all(g);
    auto eq = sg::verify_equality_theorems(g, graphs);
    auto comp = sg::verify_completeness(g, graphs);
    auto dom = sg::verify_dominance(g, graphs[{sg::BaseGraph::commuting, sg::Relation::order}]);
    nlohmann::json gj = {{"label", entry.label}, {"size", g.size()}};
    gj["equality"] = nlohmann::json::array();
    for (auto const& v : eq) {
      gj["equality"].push_back(sg::to_json(v, entry.label));
      if (!v.consistent()) mismatches.push_back({{"label", entry.label}, {"theorem_id", v.theorem_id}});
    }
    gj["completeness"] = nlohmann::json::array();
    for (auto const& v : comp) {
      gj["completeness"].push_back(sg::to_json(v, entry.label));
      if (!v.consistent())
        mismatches.push_back({{"label", entry.label}, {"theorem_id", "complete:" + sg::to_string(v.kind)}});
    }
    gj["dominant"] = {{"brute_force", dom.brute_force}, {"predicted", dom.predicted},
                      {"consistent", dom.consistent()}};
    if (!dom.consistent()) mismatches.push_back({{"label", entry.label}, {"theorem_id", "dominant"}});
    if (format == "csv") sg::write_verdict_csv(sink.stream(), entry.label, eq);
    report["groups"].push_back(std::move(gj));
  }

  // The S_n / A_n checks join the default run; with a custom catalog they
  // run only when --family-last asks for them.
  bool custom_catalog = !cfg.catalog_path.empty() || !cfg.groups.empty();
  unsigned family_last = cfg.family_last ? cfg.family_last : (custom_catalog ? 0 : cfg.spectrum_cap);
  for (auto f : {sg::Family::symmetric, sg::Family::alternating}) {
    if (family_last < 4) break;
    for (auto const& c : sg::verify_family_connectivity(f, 4, family_last)) {
      report["families"].push_back(sg::to_json(c));
      if (!c.consistent())
        mismatches.push_back({{"label", sg::to_string(f) + std::to_string(c.n)},
                              {"theorem_id", "connectivity/diameter"}});
    }
  }
  report["mismatches"] = mismatches;
  if (format == "json") {
    sink.stream() << report.dump(2) << '\n';
  } else if (format != "csv") {
    throw sg::InvalidParameter("unknown format '" + format + "'");
  }
  if (!mismatches.empty()) {
    for (auto const& m : mismatches)
      std::cerr << "mismatch: " << m["label"].get<std::string>() << " "
                << m["theorem_id"].get<std::string>() << '\n';
    return kExitMismatch;
  }
  return 0;
}

int cmd_spectrum(RunConfig const& cfg) {
  std::optional<sg::OrderSpectrum> order_set;
  std::optional<sg::Family> family;
  if (!cfg.group.empty()) {
    order_set = sg::spectrum_explicit(sg::group_from_label(cfg.group, cfg.budget));
  } else {
    if (cfg.n == 0) throw sg::InvalidParameter("spectrum needs --group or --family with --n");
    family = sg::parse_family(cfg.family);
    order_set = sg::spectrum_for(*family, cfg.n, cfg.spectrum_cap);
  }
  auto q = sg::quotient_graph(*order_set, true);
  auto comps = sg::quotient_components(q);
  auto d = sg::quotient_diameter(q);
  auto j = sg::to_json(*order_set);
  j["reduced_components"] = sg::quotient_component_orders(q);
  j["connected"] = comps.is_connected;
  j["diameter"] = d.infinite ? nlohmann::json("inf") : nlohmann::json(d.value);
  if (family && cfg.n >= 4) {
    auto pred = sg::predict_connectivity(cfg.n, *family);
    j["predicted_components"] = pred.components;
    if (pred.connected) {
      auto w = sg::search_witness(cfg.n, *family);
      if (w) {
        j["witness"] = {{"T1", sg::serialize_prime_powers(w->t1, w->alpha)},
                        {"T2", sg::serialize_prime_powers(w->t2, w->beta)}};
      } else {
        j["witness"] = nullptr;
      }
    }
  }
  Sink sink(cfg.output);
  sink.stream() << j.dump(2) << '\n';
  return 0;
}

int cmd_scan(RunConfig const& cfg) {
  auto f = sg::parse_family(cfg.family);
  if (cfg.first < 4) throw sg::InvalidParameter("scan range starts at n >= 4");
  auto rows = sg::conjecture_scan(f, cfg.first, cfg.last, cfg.workers, cfg.spectrum_cap);
  Sink sink(cfg.output);
  sg::write_scan_csv(sink.stream(), rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Super graphs on finite groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output, "Output file (default stdout)");
    sub->add_option("--budget", cfg.budget, "Largest explicit group")->check(CLI::PositiveNumber);
    sub->add_option("--spectrum-cap", cfg.spectrum_cap, "Largest symbolic degree")
        ->check(CLI::Range(1U, sg::kSpectrumCap));
  };

  auto* build = app.add_subcommand("build", "Build one super graph");
  build->add_option("--group,-g", cfg.group, "Group label, e.g. D14 or S3xZ3")->required();
  build->add_option("--graph", cfg.graph, "power | enhanced_power | commuting");
  build->add_option("--relation", cfg.relation, "equality | conjugacy | order");
  build->add_flag("--reduced", cfg.reduced, "Delete dominant vertices");
  build->add_option("--format", cfg.format, "dot | json | bits");
  add_common(build);

  auto* verify = app.add_subcommand("verify", "Check the characterizations over a catalog");
  verify->add_option("--catalog", cfg.catalog_path, "Manifest with one group label per line");
  verify->add_option("--group,-g", cfg.groups, "Group label (repeatable)");
  verify->add_option("--format", cfg.format, "json | csv");
  verify->add_option("--family-last", cfg.family_last, "Last n for the S_n/A_n checks (default: spectrum cap, or none with a custom catalog)");
  add_common(verify);

  auto* spectrum = app.add_subcommand("spectrum", "Order spectrum and reduced quotient");
  spectrum->add_option("--group,-g", cfg.group, "Explicit group label");
  spectrum->add_option("--family", cfg.family, "symmetric | alternating");
  spectrum->add_option("--n", cfg.n, "Degree");
  add_common(spectrum);

  auto* scan = app.add_subcommand("scan", "Connectivity and diameter over a range of n");
  scan->add_option("--family", cfg.family, "symmetric | alternating")->required();
  scan->add_option("--from", cfg.first, "First n (>= 4)");
  scan->add_option("--to", cfg.last, "Last n");
  scan->add_option("--workers,-j", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*scan) return cmd_scan(cfg);
  } catch (sg::BudgetExceeded const& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::domain_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
