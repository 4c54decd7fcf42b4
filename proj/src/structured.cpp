#include "mincover/structured.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "mincover/countable.hpp"
#include "mincover/error.hpp"

namespace mincover {

namespace {

// C(n, k), saturating at `cap + 1`.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::size_t>(r);
}

void require_covering_family(const Cover& result, const char* who) {
  if (!is_minimal_cover(result).minimal) {
    throw InvariantViolation(std::string(who) + " produced a non-minimal cover");
  }
}

}  // namespace

NmResult check_nm(const FiniteHypergraph& h, NmParams p, NmLimits limits) {
  if (p.n == 0 || p.m == 0) throw std::invalid_argument("n and m must be positive");
  const IndexSet edges = h.distinct_indices();
  const std::size_t total = binomial_capped(edges.size(), p.n, limits.max_subfamilies);
  if (total > limits.max_subfamilies) {
    throw SizeLimit("check_nm would examine more than " + std::to_string(limits.max_subfamilies) +
                    " subfamilies");
  }

  NmResult result;
  if (p.n > edges.size()) return result;

  std::vector<std::size_t> combo(p.n);
  for (std::size_t j = 0; j < p.n; ++j) combo[j] = j;
  // Prefix intersections: prefix[j] = edges[combo[0]] & ... & edges[combo[j]].
  std::vector<VertexSet> prefix(p.n);
  std::size_t valid = 0;
  while (true) {
    for (std::size_t j = valid; j < p.n; ++j) {
      prefix[j] = j == 0 ? h.edge(edges[combo[0]]) : (prefix[j - 1] & h.edge(edges[combo[j]]));
    }
    if (prefix[p.n - 1].size() >= p.m) {
      result.holds = false;
      IndexSet sub;
      for (std::size_t j : combo) sub.push_back(edges[j]);
      result.subfamily = std::move(sub);
      result.intersection = prefix[p.n - 1];
      return result;
    }
    std::size_t i = p.n;
    while (i > 0 && combo[i - 1] == edges.size() - p.n + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < p.n; ++j) combo[j] = combo[j - 1] + 1;
    valid = i - 1;
  }
  return result;
}

std::vector<std::size_t> vertex_degrees(const FiniteHypergraph& h) {
  std::vector<std::size_t> deg(h.vertices().empty() ? 0 : h.vertices().max() + 1, 0);
  for (EdgeIndex i : h.distinct_indices()) {
    for (Vertex v : h.edge(i)) ++deg[v];
  }
  return deg;
}

DegreeReport check_point_finite(const FiniteHypergraph& h, std::size_t d) {
  const auto deg = vertex_degrees(h);
  DegreeReport report;
  for (Vertex v : h.vertices()) {
    if (!report.max_vertex || deg[v] > report.max_degree) {
      report.max_vertex = v;
      report.max_degree = deg[v];
    }
  }
  report.holds = report.max_degree <= d;
  return report;
}

std::string_view to_string(SupportVerdict v) {
  switch (v) {
    case SupportVerdict::HoldsOnInstance:
      return "holds-on-instance";
    case SupportVerdict::FailsWithWitness:
      return "fails-with-witness";
    case SupportVerdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

SupportReport check_finite_support(const FiniteHypergraph& h, const VertexSet& probe,
                                   std::size_t threshold) {
  if (threshold == 0) throw std::invalid_argument("threshold must be positive");
  SupportReport report;
  report.support = probe;
  for (EdgeIndex i : h.distinct_indices()) {
    if (report.containing.size() == threshold) break;
    if (probe.is_subset_of(h.edge(i))) report.containing.push_back(i);
  }
  report.verdict = report.containing.size() >= threshold ? SupportVerdict::FailsWithWitness
                                                         : SupportVerdict::HoldsOnInstance;
  return report;
}

SupportReport check_finite_support(const LazyHypergraph& l, const VertexSet& probe,
                                   std::size_t threshold, std::size_t window) {
  const Truncation t = truncate(l, window);
  SupportReport report = check_finite_support(t.hypergraph, probe, threshold);
  for (auto& i : report.containing) i = t.lazy_index[i];
  const bool exhausted = l.edge_count() && window >= *l.edge_count();
  if (report.verdict == SupportVerdict::HoldsOnInstance && !exhausted) {
    report.verdict = SupportVerdict::Unknown;
  }
  return report;
}

Cover point_finite_cover(const FiniteHypergraph& h) {
  const IndexSet edges = h.distinct_indices();
  const auto degree = vertex_degrees(h);
  std::vector<std::size_t> removed(degree.size(), 0);

  IndexSet kept;
  for (EdgeIndex i : edges) {
    const Edge& e = h.edge(i);
    const bool fits = std::all_of(e.begin(), e.end(),
                                  [&](Vertex v) { return removed[v] + 1 < degree[v]; });
    if (fits) {
      for (Vertex v : e) ++removed[v];
    } else {
      kept.push_back(i);
    }
  }
  Cover result(h, std::move(kept));
  require_covering_family(result, "point_finite_cover");
  return result;
}

IndexSet maximal_disjoint_subfamily(const FiniteHypergraph& h) {
  IndexSet chosen;
  VertexSet used;
  for (EdgeIndex i = 0; i < h.size(); ++i) {
    const Edge& e = h.edge(i);
    if (e.empty() || e.intersects(used)) continue;
    chosen.push_back(i);
    used |= e;
  }
  return chosen;
}

namespace {

IndexSet bounded_width_indices(const FiniteHypergraph& h) {
  const IndexSet edges = h.distinct_indices();
  if (h.width() <= 1) {
    IndexSet base;
    for (EdgeIndex i : edges) {
      if (!h.edge(i).empty()) base.push_back(i);
    }
    return base;
  }

  const IndexSet disjoint = maximal_disjoint_subfamily(h);
  const VertexSet stripped = union_of(h, disjoint);
  // Traces of the distinct edges outside the disjoint family's union.
  std::vector<Edge> traces;
  traces.reserve(edges.size());
  for (EdgeIndex i : edges) traces.push_back(h.edge(i) - stripped);
  const FiniteHypergraph reduced(std::move(traces));

  IndexSet lifted;
  for (EdgeIndex j : bounded_width_indices(reduced)) {
    lifted.push_back(edges[reduced.representative(j)]);
  }
  const VertexSet lifted_union = union_of(h, lifted);
  for (EdgeIndex d : disjoint) {
    if (!h.edge(d).is_subset_of(lifted_union)) lifted.push_back(d);
  }
  std::sort(lifted.begin(), lifted.end());
  lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
  return lifted;
}

}  // namespace

Cover bounded_width_cover(const FiniteHypergraph& h) {
  Cover result(h, bounded_width_indices(h));
  if (!is_cover(result)) throw InvariantViolation("bounded_width_cover lost a vertex");
  require_covering_family(result, "bounded_width_cover");
  return result;
}

}  // namespace mincover
