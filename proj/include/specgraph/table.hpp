#pragma once

#include <cstdio>
#include <functional>

#include "specgraph/cospectrality.hpp"
#include "specgraph/family_expr.hpp"

namespace specgraph {

/// One table line: a family instance under one norm, brute force next to the
/// closed form.
struct TableRow {
  std::string graph;
  std::string norm;
  double cs_bruteforce;
  double cs_closed_form;
  std::string minimizers;  // brute-force tie set, family labels, '|'-separated
};

inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// The five-family comparison table: every instance of nK1, K2+(n-2)K1, K_n,
/// K_{n,n} and K_{n,n+1} with order <= max_n, both norms, cs computed brute
/// force over the enumerated classes and next to the closed forms.
inline std::vector<TableRow> paper_table(int max_n, GraphUniverse& u,
                                         bool long_run = false) {
  if (max_n < 2) throw std::invalid_argument("paper_table: max_n < 2");
  if (max_n > 9 && !long_run)
    throw std::invalid_argument(
        "paper_table: order 10 is a long-run job; pass the long-run flag");
  if (max_n > kMaxEnumerationOrder)
    throw std::invalid_argument("paper_table: max_n above enumeration support");
  const std::pair<CsFamily, std::function<int(int)>> families[] = {
      {CsFamily::Empty, [](int n) { return n; }},
      {CsFamily::SingleEdge, [](int n) { return n; }},
      {CsFamily::Complete, [](int n) { return n; }},
      {CsFamily::Balanced, [](int n) { return 2 * n; }},
      {CsFamily::NearBalanced, [](int n) { return 2 * n + 1; }},
  };
  std::vector<TableRow> rows;
  for (const auto& [family, order_of] : families) {
    for (int p = 2; order_of(p) <= max_n; ++p) {
      const ClosedFormCs cf = cs_closed_form(family, p);
      const std::string label = describe_graph(cf.graph);
      for (Norm norm : {Norm::L1, Norm::L2Sq}) {
        const CsResult r =
            cospectrality(cf.graph, norm, u.get(cf.graph.order()), u.jobs());
        std::string mins;
        for (const auto& c : r.minimizers) {
          if (!mins.empty()) mins += "|";
          const Graph m = graph6_decode(c.bytes);
          const std::string ml = describe_graph(m);
          mins += ml.empty() ? "g6:" + c.bytes : ml;
        }
        rows.push_back(TableRow{label, norm_name(norm), r.value,
                                norm == Norm::L1 ? cf.value_l1 : cf.value_l2sq,
                                std::move(mins)});
      }
    }
  }
  return rows;
}

inline std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "graph,norm,cs_bruteforce,cs_closed_form,minimizers\n";
  for (const auto& r : rows) {
    out += "\"" + r.graph + "\"," + r.norm + "," + format_real(r.cs_bruteforce) + "," +
           format_real(r.cs_closed_form) + ",\"" + r.minimizers + "\"\n";
  }
  return out;
}

}  // namespace specgraph
