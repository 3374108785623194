#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <unordered_set>

#include "specgraph/canonical.hpp"
#include "specgraph/parallel.hpp"
#include "specgraph/spectrum.hpp"

namespace specgraph {

struct EdgeFilter {
  int min_edges = 0;
  int max_edges = kMaxOrder * (kMaxOrder - 1) / 2;
};

/// One representative per isomorphism class of a fixed order, in canonical
/// (graph6) ascending order. Spectra are computed once on demand and shared
/// by every consumer.
struct GraphSet {
  int order = 0;
  std::vector<Graph> graphs;
  std::vector<CanonicalForm> canon;
  std::vector<std::vector<double>> spectra;  // filled by ensure_spectra

  std::size_t size() const { return graphs.size(); }

  void ensure_spectra(int jobs = 1) {
    if (!spectra.empty()) return;
    spectra.resize(graphs.size());
    parallel_chunks(graphs.size(), jobs, [&](std::size_t, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) spectra[i] = eigenvalues(graphs[i]).values;
    });
  }
};

inline constexpr int kMaxEnumerationOrder = 10;

namespace detail {

/// One level of canonical-augmentation growth: attach a fresh vertex to every
/// subset of each parent's vertices, keep one representative per canonical
/// form of the children.
inline std::vector<std::string> grow_level(const std::vector<std::string>& parents,
                                           int parent_order, int jobs) {
  const std::uint64_t masks = 1ull << parent_order;
  std::vector<std::vector<std::string>> partial(
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(jobs), parents.size())));
  parallel_chunks(parents.size(), jobs, [&](std::size_t chunk, std::size_t b, std::size_t e) {
    auto& out = partial[chunk];
    for (std::size_t pi = b; pi < e; ++pi) {
      const Graph parent = graph6_decode(parents[pi]);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        std::vector<std::uint64_t> rows;
        rows.reserve(static_cast<size_t>(parent_order) + 1);
        for (int u = 0; u < parent_order; ++u)
          rows.push_back(parent.row(u) |
                         (mask >> u & 1) << parent_order);
        rows.push_back(mask);
        out.push_back(
            canonical_form(Graph::from_rows(parent_order + 1, std::move(rows))).bytes);
      }
    }
  });
  std::unordered_set<std::string> dedup;
  for (auto& chunk : partial)
    for (auto& s : chunk) dedup.insert(std::move(s));
  std::vector<std::string> level(dedup.begin(), dedup.end());
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace detail

/// All non-isomorphic simple graphs on n vertices (optionally filtered by
/// edge count), one canonical representative per class, canonical ascending.
inline GraphSet enumerate_graphs(int n, std::optional<EdgeFilter> filter = std::nullopt,
                                 int jobs = 1) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumerate_graphs: order outside [1, 10]");
  std::vector<std::string> level{canonical_form(Graph(1)).bytes};
  for (int k = 1; k < n; ++k) level = detail::grow_level(level, k, jobs);
  GraphSet out;
  out.order = n;
  for (const auto& s : level) {
    Graph g = graph6_decode(s);
    if (filter) {
      const int m = g.edge_count();
      if (m < filter->min_edges || m > filter->max_edges) continue;
    }
    out.canon.push_back(CanonicalForm{s});
    out.graphs.push_back(std::move(g));
  }
  return out;
}

/// Lazy per-order cache of enumerated classes with spectra. Enumerating and
/// solving order 9 takes minutes; every consumer in a process shares one
/// universe.
class GraphUniverse {
public:
  explicit GraphUniverse(int jobs = 1) : jobs_(jobs) {}

  const GraphSet& get(int n) {
    auto it = sets_.find(n);
    if (it == sets_.end()) {
      GraphSet s = enumerate_graphs(n, std::nullopt, jobs_);
      s.ensure_spectra(jobs_);
      it = sets_.emplace(n, std::move(s)).first;
    }
    return it->second;
  }

  int jobs() const { return jobs_; }
  void set_jobs(int jobs) { jobs_ = jobs; }  // cached orders are kept

private:
  int jobs_;
  std::map<int, GraphSet> sets_;
};

// ---------------------------------------------------------------------------
// graph6 file streams (one graph per line, LF terminated, uniform order)

inline GraphSet read_graph6_stream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_graph6_stream: cannot open " + path);
  GraphSet out;
  out.order = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Graph g = [&] {
      try {
        return graph6_decode(line);
      } catch (const std::exception& e) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": malformed graph6 line: " + e.what());
      }
    }();
    if (out.order == -1) {
      out.order = g.order();
    } else if (g.order() != out.order) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": order " + std::to_string(g.order()) +
                               " differs from earlier order " + std::to_string(out.order));
    }
    out.canon.push_back(canonical_form(g));
    out.graphs.push_back(std::move(g));
  }
  if (out.order == -1) throw std::runtime_error("read_graph6_stream: empty file " + path);
  return out;
}

inline std::size_t write_graph6_stream(const GraphSet& set, const std::string& path) {
  std::ofstream outf(path);
  if (!outf) throw std::runtime_error("write_graph6_stream: cannot open " + path);
  for (const auto& g : set.graphs) outf << graph6_encode(g) << '\n';
  if (!outf) throw std::runtime_error("write_graph6_stream: write failure on " + path);
  return set.graphs.size();
}

}  // namespace specgraph
