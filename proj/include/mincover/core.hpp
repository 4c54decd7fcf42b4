#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mincover/vertex_set.hpp"

namespace mincover {

using Edge = VertexSet;
using EdgeIndex = std::size_t;
/// Ascending, duplicate-free list of edge indices.
using IndexSet = std::vector<EdgeIndex>;
using VertexMap = std::map<Vertex, Vertex>;

/// An ordered family of finite edges. The vertex set is the union of the
/// edges; there are no free vertices.
///
/// Duplicate edges may be stored. Every edge index also knows its
/// representative: the lowest index holding an equal edge. Set-semantic
/// operations (covers, isomorphism) work on representatives only.
class FiniteHypergraph {
 public:
  FiniteHypergraph() = default;
  explicit FiniteHypergraph(std::vector<Edge> edges);
  /// `labels[v]` names vertex id `v`; ids without a label print as numbers.
  FiniteHypergraph(std::vector<Edge> edges, std::vector<std::string> labels);
  FiniteHypergraph(std::initializer_list<std::initializer_list<Vertex>> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const Edge& edge(EdgeIndex i) const { return edges_.at(i); }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& vertices() const { return vertices_; }

  /// Lowest index whose edge equals edge `i`.
  EdgeIndex representative(EdgeIndex i) const { return representative_.at(i); }
  bool is_representative(EdgeIndex i) const { return representative_.at(i) == i; }
  /// One index per distinct edge (the lowest), ascending.
  IndexSet distinct_indices() const;
  std::size_t distinct_count() const { return distinct_count_; }

  /// Largest edge cardinality (0 for an empty family).
  std::size_t width() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;

  friend bool operator==(const FiniteHypergraph& a, const FiniteHypergraph& b) {
    return a.edges_ == b.edges_;
  }

 private:
  void index();

  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  VertexSet vertices_;
  std::vector<EdgeIndex> representative_;
  std::size_t distinct_count_ = 0;
};

VertexSet vertex_set(const FiniteHypergraph& h);

/// Trace of a hypergraph on a vertex set. Edge `i` of `traces` is
/// `h.edge(source[i]) & A`; for a plain restriction `source[i] == i`.
struct Restriction {
  FiniteHypergraph traces;
  std::vector<EdgeIndex> source;
};

Restriction restrict_to(const FiniteHypergraph& h, const VertexSet& a);
/// Traces of the listed edges only, in the listed order.
Restriction restrict_to(const FiniteHypergraph& h, const IndexSet& subfamily, const VertexSet& a);

/// Edges containing every vertex of `a`.
IndexSet sub_containing(const FiniteHypergraph& h, const VertexSet& a);
/// Edges disjoint from `b`.
IndexSet sub_disjoint(const FiniteHypergraph& h, const VertexSet& b);
IndexSet sub_cont_disj(const FiniteHypergraph& h, const VertexSet& a, const VertexSet& b);

/// Union of the listed edges.
VertexSet union_of(const FiniteHypergraph& h, const IndexSet& indices);

/// Indices of edges not strictly contained in another edge. All copies of a
/// duplicated maximal edge are reported.
IndexSet maximal_edges(const FiniteHypergraph& h);

struct IsomorphismOptions {
  std::size_t max_vertices = 10;
};

/// Vertex bijection carrying the distinct edges of `a` onto those of `b`,
/// or nullopt. Throws SizeLimit when either vertex set exceeds the bound.
std::optional<VertexMap> find_isomorphism(const FiniteHypergraph& a, const FiniteHypergraph& b,
                                          IsomorphismOptions opts = {});

bool is_isomorphic(const FiniteHypergraph& a, const FiniteHypergraph& b,
                   IsomorphismOptions opts = {});

}  // namespace mincover
