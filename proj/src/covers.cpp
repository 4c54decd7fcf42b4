#include "mincover/covers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "mincover/error.hpp"

namespace mincover {

namespace {

// Per-vertex multiplicity over a set of edges, indexed by vertex id.
class CoverCount {
 public:
  explicit CoverCount(const VertexSet& universe)
      : count_(universe.empty() ? 0 : universe.max() + 1, 0) {}

  void add(const Edge& e) {
    for (Vertex v : e) ++count_[v];
  }
  void remove(const Edge& e) {
    for (Vertex v : e) --count_[v];
  }
  std::size_t operator[](Vertex v) const { return count_[v]; }

  // True when every member of `e` is also covered by some other edge.
  bool redundant(const Edge& e) const {
    for (Vertex v : e) {
      if (count_[v] < 2) return false;
    }
    return true;
  }

 private:
  std::vector<std::size_t> count_;
};

void require_cover(const Cover& c) {
  if (!is_cover(c)) throw NotACover("selection does not cover the vertex set");
}

}  // namespace

Cover::Cover(const FiniteHypergraph& host, IndexSet selected)
    : host_(&host), selected_(std::move(selected)) {
  std::sort(selected_.begin(), selected_.end());
  selected_.erase(std::unique(selected_.begin(), selected_.end()), selected_.end());
  if (!selected_.empty() && selected_.back() >= host.size()) {
    throw std::out_of_range("edge index " + std::to_string(selected_.back()) +
                            " out of range for " + std::to_string(host.size()) + " edges");
  }
}

bool is_cover(const Cover& c) { return c.covered() == c.host().vertices(); }

IndexSet collapse_duplicates(const Cover& c) {
  const auto& h = c.host();
  IndexSet out;
  out.reserve(c.size());
  std::vector<EdgeIndex> seen_reps;
  for (EdgeIndex i : c.selected()) {
    const EdgeIndex rep = h.representative(i);
    if (std::find(seen_reps.begin(), seen_reps.end(), rep) != seen_reps.end()) continue;
    seen_reps.push_back(rep);
    out.push_back(i);
  }
  return out;
}

MinimalityReport is_minimal_cover(const Cover& c) {
  require_cover(c);
  const auto& h = c.host();
  const IndexSet sel = collapse_duplicates(c);

  CoverCount count(h.vertices());
  for (EdgeIndex i : sel) count.add(h.edge(i));

  MinimalityReport report;
  for (EdgeIndex i : sel) {
    bool found = false;
    for (Vertex v : h.edge(i)) {
      if (count[v] == 1) {
        report.private_vertex.emplace(i, v);
        found = true;
        break;
      }
    }
    if (!found && !report.violating_edge) report.violating_edge = i;
  }
  report.minimal = !report.violating_edge.has_value();
  return report;
}

bool is_minimal_cover_def(const Cover& c, CoverLimits limits) {
  require_cover(c);
  const auto& h = c.host();
  const IndexSet sel = collapse_duplicates(c);
  if (sel.size() > limits.max_edges) {
    throw SizeLimit("definition check enumerates subsets; selection of " +
                    std::to_string(sel.size()) + " exceeds " + std::to_string(limits.max_edges));
  }
  const std::uint64_t full = (std::uint64_t{1} << sel.size()) - 1;
  const VertexSet& target = h.vertices();
  VertexSet u;
  // Proper subsets, largest masks first: non-minimal covers usually fail fast.
  for (std::uint64_t mask = full; mask-- > 0;) {
    u.clear();
    for (std::size_t j = 0; j < sel.size(); ++j) {
      if ((mask >> j) & 1U) u |= h.edge(sel[j]);
    }
    if (u == target) return false;
  }
  return true;
}

Cover greedy_minimalize(const Cover& c) {
  require_cover(c);
  const auto& h = c.host();
  CoverCount count(h.vertices());
  for (EdgeIndex i : c.selected()) count.add(h.edge(i));

  IndexSet kept;
  for (EdgeIndex i : c.selected()) {
    if (count.redundant(h.edge(i))) {
      count.remove(h.edge(i));
    } else {
      kept.push_back(i);
    }
  }
  return Cover(h, std::move(kept));
}

Cover full_cover(const FiniteHypergraph& h) {
  IndexSet all(h.size());
  for (EdgeIndex i = 0; i < h.size(); ++i) all[i] = i;
  return Cover(h, std::move(all));
}

MinimalCoverEnumerator::MinimalCoverEnumerator(const FiniteHypergraph& h, CoverLimits limits)
    : host_(&h) {
  if (h.distinct_count() > limits.max_edges) {
    throw SizeLimit("enumeration limited to " + std::to_string(limits.max_edges) +
                    " distinct edges, got " + std::to_string(h.distinct_count()));
  }
  for (EdgeIndex i : h.distinct_indices()) {
    if (!h.edge(i).empty()) candidates_.push_back(i);
  }
}

bool MinimalCoverEnumerator::advance() {
  const std::size_t n = candidates_.size();
  if (!started_) {
    started_ = true;
    k_ = 0;
    combo_.clear();
    return true;
  }
  // Next k-combination of 0..n-1 in lexicographic order.
  std::size_t i = k_;
  while (i > 0 && combo_[i - 1] == n - k_ + i - 1) --i;
  if (i > 0) {
    ++combo_[i - 1];
    for (std::size_t j = i; j < k_; ++j) combo_[j] = combo_[j - 1] + 1;
    return true;
  }
  // Each edge of a minimal cover owns a distinct private vertex.
  if (++k_ > n || k_ > host_->vertices().size()) return false;
  combo_.resize(k_);
  for (std::size_t j = 0; j < k_; ++j) combo_[j] = j;
  return true;
}

std::optional<Cover> MinimalCoverEnumerator::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    IndexSet sel;
    sel.reserve(k_);
    for (std::size_t j : combo_) sel.push_back(candidates_[j]);
    Cover c(*host_, std::move(sel));
    if (is_cover(c) && is_minimal_cover(c).minimal) return c;
  }
  return std::nullopt;
}

std::vector<Cover> enumerate_minimal_covers(const FiniteHypergraph& h, CoverLimits limits) {
  std::vector<Cover> out;
  MinimalCoverEnumerator it(h, limits);
  while (auto c = it.next()) out.push_back(std::move(*c));
  return out;
}

Cover delete_and_lift(const FiniteHypergraph& h, EdgeIndex f) {
  const Edge& removed = h.edge(f);
  const VertexSet rest = h.vertices() - removed;
  const Restriction trace = restrict_to(h, rest);
  const Cover local = greedy_minimalize(full_cover(trace.traces));

  IndexSet lifted;
  for (EdgeIndex j : local.selected()) lifted.push_back(trace.traces.representative(j));
  std::sort(lifted.begin(), lifted.end());
  lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());

  if (union_of(h, lifted) != h.vertices()) lifted.push_back(f);
  Cover result(h, std::move(lifted));
  if (!is_minimal_cover(result).minimal) {
    throw InvariantViolation("delete_and_lift produced a non-minimal cover");
  }
  return result;
}

}  // namespace mincover
