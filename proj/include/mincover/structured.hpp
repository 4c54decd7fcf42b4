#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "mincover/core.hpp"
#include "mincover/covers.hpp"

namespace mincover {

class LazyHypergraph;

/// "Every n distinct edges share fewer than m vertices."
struct NmParams {
  std::size_t n = 2;
  std::size_t m = 2;
};

struct NmResult {
  bool holds = true;
  /// First violating n-subfamily in lexicographic order, with its intersection.
  std::optional<IndexSet> subfamily;
  VertexSet intersection;
};

struct NmLimits {
  /// Maximum number of n-subfamilies examined.
  std::size_t max_subfamilies = 10'000'000;
};

/// Checks the (n, m) intersection condition over the distinct edges.
/// Throws std::invalid_argument for n or m of zero and SizeLimit when the
/// number of n-subfamilies exceeds the budget.
NmResult check_nm(const FiniteHypergraph& h, NmParams p, NmLimits limits = {});

struct DegreeReport {
  bool holds = true;
  /// Lowest vertex of maximum degree; nullopt on an empty vertex set.
  std::optional<Vertex> max_vertex;
  std::size_t max_degree = 0;
};

/// Quantitative point-finiteness: every vertex lies in at most `d`
/// distinct edges.
DegreeReport check_point_finite(const FiniteHypergraph& h, std::size_t d);

/// Distinct-edge degree of every vertex, indexed by vertex id.
std::vector<std::size_t> vertex_degrees(const FiniteHypergraph& h);

enum class SupportVerdict { HoldsOnInstance, FailsWithWitness, Unknown };

std::string_view to_string(SupportVerdict v);

struct SupportReport {
  SupportVerdict verdict = SupportVerdict::Unknown;
  /// The probed finite set F and the edges found containing it.
  VertexSet support;
  IndexSet containing;
};

/// Finite surrogate of "some finite F inside I lies in only finitely many
/// edges". Since the family of edges containing F shrinks as F grows, the
/// best candidate inside a finite probe set is the probe set itself: the
/// check counts the edges containing `probe` against `threshold`. Reaching
/// the threshold is reported with a witness list of exactly `threshold`
/// edges; staying below it holds on a finite hypergraph.
SupportReport check_finite_support(const FiniteHypergraph& h, const VertexSet& probe,
                                   std::size_t threshold);

/// Same check on the first `window` edges of a lazy family. Staying below
/// the threshold is Unknown unless the window exhausts a finite family.
SupportReport check_finite_support(const LazyHypergraph& l, const VertexSet& probe,
                                   std::size_t threshold, std::size_t window);

/// Minimal cover as the complement of a greedily maximal family M with
/// |M_v| < |E_v| for every vertex v. Works on distinct edges.
Cover point_finite_cover(const FiniteHypergraph& h);

/// Greedy ascending scan for a maximal pairwise disjoint family of
/// nonempty edges.
IndexSet maximal_disjoint_subfamily(const FiniteHypergraph& h);

/// Minimal cover by induction on the edge width: strip a maximal disjoint
/// family, cover the stripped traces, lift, then keep the disjoint edges not
/// swallowed by the lifted cover.
Cover bounded_width_cover(const FiniteHypergraph& h);

}  // namespace mincover
