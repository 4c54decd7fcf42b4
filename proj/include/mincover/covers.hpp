#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mincover/core.hpp"

namespace mincover {

/// A selection of edge indices of a host hypergraph. Whether it covers the
/// host is a property to check, not a construction-time guarantee.
///
/// The host is held by reference and must outlive the cover.
class Cover {
 public:
  /// Sorts and deduplicates `selected`; throws std::out_of_range on an
  /// index outside the host.
  Cover(const FiniteHypergraph& host, IndexSet selected);

  const FiniteHypergraph& host() const { return *host_; }
  const IndexSet& selected() const { return selected_; }
  std::size_t size() const { return selected_.size(); }
  VertexSet covered() const { return union_of(*host_, selected_); }

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.host_ == b.host_ && a.selected_ == b.selected_;
  }

 private:
  const FiniteHypergraph* host_;
  IndexSet selected_;
};

struct MinimalityReport {
  bool minimal = false;
  /// Selected edge -> a vertex no other selected edge contains. Filled for
  /// every (deduplicated) selected edge when minimal.
  std::map<EdgeIndex, Vertex> private_vertex;
  /// A selected edge whose removal leaves a cover. Set when not minimal.
  std::optional<EdgeIndex> violating_edge;
};

struct CoverLimits {
  /// Bound on the selection size for subset-enumerating checks.
  std::size_t max_edges = 20;
};

bool is_cover(const Cover& c);

/// Selection with duplicate edges collapsed to the lowest selected index.
IndexSet collapse_duplicates(const Cover& c);

/// Private-vertex test, evaluated on the collapsed selection. An empty edge
/// never owns a private vertex. Throws NotACover.
MinimalityReport is_minimal_cover(const Cover& c);

/// True iff no proper subset of the collapsed selection is a cover; checks
/// every subset. Throws NotACover, or SizeLimit above `limits.max_edges`.
bool is_minimal_cover_def(const Cover& c, CoverLimits limits = {});

/// Drops selected edges in ascending index order whenever the rest still
/// covers. Throws NotACover.
Cover greedy_minimalize(const Cover& c);

/// Cover of `h` that selects every edge.
Cover full_cover(const FiniteHypergraph& h);

/// Lazily yields the minimal covers of a hypergraph over its distinct
/// edges, ordered by size and then lexicographically. Each enumerator owns
/// its own state.
class MinimalCoverEnumerator {
 public:
  /// Throws SizeLimit when the distinct edge count exceeds the bound.
  explicit MinimalCoverEnumerator(const FiniteHypergraph& h, CoverLimits limits = {});

  std::optional<Cover> next();

 private:
  bool advance();

  const FiniteHypergraph* host_;
  IndexSet candidates_;
  std::size_t k_ = 0;
  std::vector<std::size_t> combo_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Cover> enumerate_minimal_covers(const FiniteHypergraph& h, CoverLimits limits = {});

/// Builds a minimal cover of `h` from a minimal cover of the trace on
/// `V \ edge(f)`: lift each trace to its lowest-index preimage and add edge
/// `f` when the lifted family leaves part of it uncovered.
Cover delete_and_lift(const FiniteHypergraph& h, EdgeIndex f);

}  // namespace mincover
