// Command-line surface for the spectral-cospectrality library: graph spectra,
// spectral distances, brute-force cs with minimizer sets, class enumeration,
// theorem verification and the five-family comparison table.
//
// Exit codes: 0 ok/confirmed, 1 usage error, 2 runtime error,
// 3 verification counterexample.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specgraph/specgraph.hpp"

namespace {

using namespace specgraph;

// "g6:..." is a graph6 literal, anything else a family expression
Graph parse_graph_arg(const std::string& text) {
  if (text.rfind("g6:", 0) == 0) return graph6_decode(text.substr(3));
  return parse_family_graph(text);
}

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string minimizer_label(const CanonicalForm& c) {
  const Graph g = graph6_decode(c.bytes);
  const std::string label = describe_graph(g);
  return label.empty() ? "g6:" + c.bytes : label;
}

GraphSet candidate_set(int order, const std::string& stream_path, bool long_run,
                       int jobs) {
  if (!stream_path.empty()) {
    GraphSet set = read_graph6_stream(stream_path);
    if (set.order != order)
      throw std::runtime_error("stream order " + std::to_string(set.order) +
                               " does not match the query order " +
                               std::to_string(order));
    return set;
  }
  if (order > kMaxEnumerationOrder)
    throw std::runtime_error(
        "orders above 10 need an external --stream of graph6 candidates");
  if (order == kMaxEnumerationOrder && !long_run)
    throw std::runtime_error(
        "order 10 enumerates 12,005,168 classes; pass --long-run to proceed");
  return enumerate_graphs(order, std::nullopt, jobs);
}

int run(int argc, char** argv) {
  CLI::App app{"graph spectra, spectral distances and cospectrality"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker thread cap")->capture_default_str();

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "adjacency eigenvalues, descending");
  std::string sp_graph;
  bool sp_charpoly = false;
  sp->add_option("graph", sp_graph, "family expression or g6:STRING")->required();
  sp->add_flag("--exact-charpoly", sp_charpoly, "also print integer coefficients");

  // distance
  auto* di = app.add_subcommand("distance", "spectral distance between two graphs");
  std::string di_norm = "l1", di_a, di_b;
  di->add_option("--norm", di_norm, "l1 or l2sq")->check(CLI::IsMember({"l1", "l2sq"}));
  di->add_option("a", di_a)->required();
  di->add_option("b", di_b)->required();

  // cs
  auto* cs = app.add_subcommand("cs", "brute-force cospectrality with minimizers");
  std::string cs_expr, cs_norm = "l1", cs_stream;
  bool cs_long = false;
  cs->add_option("graph", cs_expr)->required();
  cs->add_option("--norm", cs_norm)->check(CLI::IsMember({"l1", "l2sq"}));
  cs->add_option("--stream", cs_stream, "graph6 file of candidate classes");
  cs->add_flag("--long-run", cs_long, "allow the order-10 internal enumeration");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "non-isomorphic graphs of one order");
  int en_n = 0;
  std::string en_edges, en_out;
  en->add_option("--n", en_n, "order (1..10)")->required();
  en->add_option("--edges", en_edges, "MIN:MAX edge-count filter");
  en->add_option("--out", en_out, "write graph6 lines to this file");

  // verify
  auto* ve = app.add_subcommand("verify", "exhaustively check one theorem");
  std::string ve_id;
  int ve_max = 0;
  ve->add_option("--theorem", ve_id, "theorem id (e.g. thm_1_3)")->required();
  ve->add_option("--max-n", ve_max, "largest order to scan")->required();

  // table
  auto* ta = app.add_subcommand("table", "five-family comparison table");
  int ta_max = 0;
  std::string ta_format = "csv";
  bool ta_long = false;
  ta->add_option("--max-n", ta_max)->required();
  ta->add_option("--format", ta_format)->check(CLI::IsMember({"csv", "json"}));
  ta->add_flag("--long-run", ta_long);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (sp->parsed()) {
    const Graph g = parse_graph_arg(sp_graph);
    for (double v : eigenvalues(g).values) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", v);
      std::cout << buf << "\n";
    }
    if (sp_charpoly) {
      std::cout << "charpoly";
      for (const auto& c : char_poly(g).coeffs) std::cout << " " << c;
      std::cout << "\n";
    }
    return 0;
  }

  if (di->parsed()) {
    const Graph a = parse_graph_arg(di_a);
    const Graph b = parse_graph_arg(di_b);
    const double d = di_norm == "l1" ? sigma(a, b) : lambda_sq(a, b);
    std::cout << fixed12(d) << "\n";
    return 0;
  }

  if (cs->parsed()) {
    const Graph g = parse_graph_arg(cs_expr);
    const GraphSet set = candidate_set(g.order(), cs_stream, cs_long, jobs);
    const Norm norm = cs_norm == "l1" ? Norm::L1 : Norm::L2Sq;
    const CsResult r = cospectrality(g, norm, set, jobs);
    std::cout << "cs = " << fixed12(r.value);
    if (r.exact_zero) std::cout << " (exact zero: cospectral mate)";
    std::cout << ", minimizers:";
    for (const auto& c : r.minimizers) std::cout << " " << minimizer_label(c);
    std::cout << "\n";
    std::cerr << r.graphs_scanned << " candidate classes scanned\n";
    return 0;
  }

  if (en->parsed()) {
    std::optional<EdgeFilter> filter;
    if (!en_edges.empty()) {
      const auto colon = en_edges.find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("--edges expects MIN:MAX");
      filter = EdgeFilter{std::stoi(en_edges.substr(0, colon)),
                          std::stoi(en_edges.substr(colon + 1))};
    }
    const GraphSet set = enumerate_graphs(en_n, filter, jobs);
    if (en_out.empty()) {
      for (const auto& g : set.graphs) std::cout << graph6_encode(g) << "\n";
    } else {
      write_graph6_stream(set, en_out);
    }
    std::cerr << set.size() << " classes\n";
    return 0;
  }

  if (ve->parsed()) {
    GraphUniverse u(jobs);
    const VerificationReport rep = verify(ve_id, ve_max, u);
    if (rep.confirmed) {
      std::cout << rep.theorem << ": confirmed up to order " << rep.max_order << " ("
                << rep.details << ")\n";
      return 0;
    }
    std::cout << rep.theorem << ": counterexample " << rep.witness << " (" << rep.details
              << ")\n";
    return 3;
  }

  if (ta->parsed()) {
    GraphUniverse u(jobs);
    const auto rows = paper_table(ta_max, u, ta_long);
    if (ta_format == "csv") {
      std::cout << table_csv(rows);
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"graph", r.graph},
                       {"norm", r.norm},
                       {"cs_bruteforce", r.cs_bruteforce},
                       {"cs_closed_form", r.cs_closed_form},
                       {"minimizers", r.minimizers}});
      std::cout << arr.dump(2) << "\n";
    }
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const specgraph::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
