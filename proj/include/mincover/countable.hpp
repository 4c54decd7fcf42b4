#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mincover/core.hpp"
#include "mincover/covers.hpp"

namespace mincover {

struct LazyMetadata {
  bool known_point_finite = false;
  bool known_bounded_width = false;
  bool known_no_minimal_cover = false;
  /// Where the flags above come from.
  std::string provenance;
};

/// A countable hypergraph presented by an edge enumerator.
///
/// `edge_at` must be deterministic and safe to call concurrently. A finite
/// family reports its size through edge_count(); indices past it throw
/// std::out_of_range.
class LazyHypergraph {
 public:
  using EdgeFn = std::function<Edge(std::size_t)>;
  using LabelFn = std::function<std::string(Vertex)>;

  LazyHypergraph(std::string name, EdgeFn edge_at, LazyMetadata meta = {},
                 std::optional<std::size_t> edge_count = std::nullopt, LabelFn label = {});

  Edge edge_at(std::size_t i) const;
  std::optional<std::size_t> edge_count() const { return count_; }
  const LazyMetadata& metadata() const { return meta_; }
  const std::string& name() const { return name_; }
  /// External label of a vertex id (decimal id when none is defined).
  std::string label(Vertex v) const;

 private:
  std::string name_;
  EdgeFn edge_at_;
  LazyMetadata meta_;
  std::optional<std::size_t> count_;
  LabelFn label_;
};

/// Fixed bijection Z -> N: 0 -> 0, k -> 2k, -k -> 2k-1.
Vertex encode_integer(std::int64_t z);
std::int64_t decode_integer(Vertex id);

/// Finite ordinals: edge n is {0, ..., n-1}.
LazyHypergraph gen_omega();

/// Pairwise incomparable cover of Z without a minimal subcover. Index
/// 2(n-2) is [-n, 0] u {n}, index 2(n-2)+1 is {-n} u [0, n], for n >= 2.
/// Vertices use encode_integer.
LazyHypergraph gen_domotor();

struct LatticeOptions {
  std::int64_t max_radius = 16;
};

/// Maximal collinear sets (of at least two points) of the grid
/// [-r, r]^2. Point (x, y) has id (y + r)(2r + 1) + (x + r). Edges are
/// ordered by the line's normal form (a, b, c) with ax + by = c,
/// gcd(a, b) = 1 and (a, b) lexicographically positive.
/// Throws std::invalid_argument for r < 1 and SizeLimit above the bound.
LazyHypergraph gen_lattice_lines(std::int64_t r, LatticeOptions opts = {});

struct Truncation {
  FiniteHypergraph hypergraph;
  /// Finite edge index -> lazy edge index.
  std::vector<std::size_t> lazy_index;
};

/// The first `k` edges (fewer if the family is finite and shorter). Vertex
/// ids are kept; labels come from the lazy family.
Truncation truncate(const LazyHypergraph& l, std::size_t k);

/// Finite staircase: distinct vertices v_0..v_{k-1} and edges F_1..F_k with
/// F_i restricted to the vertices equal to {v_0, ..., v_{i-1}}.
///
/// The empty level of the finite ordinals is not part of the witness; any
/// edge missing every vertex supplies it.
struct OmegaWitness {
  std::vector<Vertex> omega;
  IndexSet edge_indices;  // in staircase order, not sorted
  std::size_t depth() const { return omega.size(); }
};

/// Lexicographically least depth-`depth` staircase, comparing edge index
/// sequences first and vertex sequences second. Throws
/// std::invalid_argument for depth 0.
std::optional<OmegaWitness> find_omega_witness(const FiniteHypergraph& h, std::size_t depth);

/// Empty string when `w` is a valid staircase of `h`, else the first
/// violated condition.
std::string validate_witness(const FiniteHypergraph& h, const OmegaWitness& w);

/// Traces of the witness edges on the witness vertices, for isomorphism
/// checks against a truncation of the finite ordinals.
FiniteHypergraph witness_subhypergraph(const FiniteHypergraph& h, const OmegaWitness& w);

struct ConstructionStep {
  std::size_t n = 0;
  VertexSet remaining;        // V_n
  Vertex pivot = 0;           // v_n = min V_n
  VertexSet earlier_pivots;   // B_{<n}
  IndexSet pivot_family;      // distinct edges through v_n avoiding B_{<n}
  VertexSet avoiding_union;   // union of the edges avoiding B_{<=n}
  VertexSet local_universe;   // V_n minus avoiding_union
  Restriction local;          // pivot_family traced on local_universe
  IndexSet local_cover;       // indices into local.traces
  IndexSet lifted;            // host edges added at this step
};

struct ConstructionTrace {
  std::vector<ConstructionStep> steps;
};

struct LocalConstruction {
  Cover cover;
  ConstructionTrace trace;
};

/// Builds a minimal cover vertex by vertex in ascending id order. At each
/// step the pivot is the least uncovered vertex; the edges through it that
/// avoid earlier pivots are traced on what only they can still reach, a
/// minimal cover of that trace is computed greedily and lifted to the
/// lowest-index preimages.
///
/// Throws InvariantViolation if an uncovered vertex lies in no edge avoiding
/// the earlier pivots, or if the result is not a minimal cover.
LocalConstruction local_construction(const FiniteHypergraph& h);

}  // namespace mincover
