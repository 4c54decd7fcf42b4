#include "mincover/core.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "mincover/error.hpp"

namespace mincover {

FiniteHypergraph::FiniteHypergraph(std::vector<Edge> edges) : edges_(std::move(edges)) { index(); }

FiniteHypergraph::FiniteHypergraph(std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)) {
  index();
}

FiniteHypergraph::FiniteHypergraph(std::initializer_list<std::initializer_list<Vertex>> edges) {
  edges_.reserve(edges.size());
  for (const auto& e : edges) edges_.emplace_back(e);
  index();
}

void FiniteHypergraph::index() {
  vertices_.clear();
  representative_.resize(edges_.size());
  std::unordered_map<VertexSet, EdgeIndex, VertexSetHash> first_seen;
  first_seen.reserve(edges_.size());
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    vertices_ |= edges_[i];
    auto [it, inserted] = first_seen.try_emplace(edges_[i], i);
    representative_[i] = it->second;
  }
  distinct_count_ = first_seen.size();
}

IndexSet FiniteHypergraph::distinct_indices() const {
  IndexSet out;
  out.reserve(distinct_count_);
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    if (representative_[i] == i) out.push_back(i);
  }
  return out;
}

std::size_t FiniteHypergraph::width() const {
  std::size_t w = 0;
  for (const auto& e : edges_) w = std::max(w, e.size());
  return w;
}

std::string FiniteHypergraph::label(Vertex v) const {
  if (v < labels_.size() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

VertexSet vertex_set(const FiniteHypergraph& h) { return h.vertices(); }

Restriction restrict_to(const FiniteHypergraph& h, const VertexSet& a) {
  IndexSet all(h.size());
  for (EdgeIndex i = 0; i < all.size(); ++i) all[i] = i;
  return restrict_to(h, all, a);
}

Restriction restrict_to(const FiniteHypergraph& h, const IndexSet& subfamily, const VertexSet& a) {
  std::vector<Edge> traces;
  traces.reserve(subfamily.size());
  for (EdgeIndex i : subfamily) traces.push_back(h.edge(i) & a);
  return {FiniteHypergraph(std::move(traces), h.labels()), subfamily};
}

IndexSet sub_containing(const FiniteHypergraph& h, const VertexSet& a) {
  IndexSet out;
  for (EdgeIndex i = 0; i < h.size(); ++i) {
    if (a.is_subset_of(h.edge(i))) out.push_back(i);
  }
  return out;
}

IndexSet sub_disjoint(const FiniteHypergraph& h, const VertexSet& b) {
  IndexSet out;
  for (EdgeIndex i = 0; i < h.size(); ++i) {
    if (!h.edge(i).intersects(b)) out.push_back(i);
  }
  return out;
}

IndexSet sub_cont_disj(const FiniteHypergraph& h, const VertexSet& a, const VertexSet& b) {
  IndexSet out;
  for (EdgeIndex i = 0; i < h.size(); ++i) {
    if (a.is_subset_of(h.edge(i)) && !h.edge(i).intersects(b)) out.push_back(i);
  }
  return out;
}

VertexSet union_of(const FiniteHypergraph& h, const IndexSet& indices) {
  VertexSet u;
  for (EdgeIndex i : indices) u |= h.edge(i);
  return u;
}

IndexSet maximal_edges(const FiniteHypergraph& h) {
  IndexSet out;
  for (EdgeIndex i = 0; i < h.size(); ++i) {
    const Edge& e = h.edge(i);
    bool dominated = false;
    for (EdgeIndex j = 0; j < h.size() && !dominated; ++j) {
      dominated = e.is_subset_of(h.edge(j)) && e != h.edge(j);
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

namespace {

// Distinct edges over a dense local vertex numbering.
struct IsoSide {
  std::vector<Vertex> vertices;  // local index -> original id
  std::vector<Edge> edges;       // distinct, over local indices
  std::vector<std::vector<std::size_t>> signature;
  std::vector<std::vector<std::size_t>> together;  // co-occurrence counts
};

IsoSide prepare(const FiniteHypergraph& h) {
  IsoSide side;
  side.vertices = h.vertices().to_vector();
  std::unordered_map<Vertex, Vertex> local;
  for (Vertex i = 0; i < side.vertices.size(); ++i) local[side.vertices[i]] = i;
  for (EdgeIndex i : h.distinct_indices()) {
    Edge e;
    for (Vertex v : h.edge(i)) e.insert(local[v]);
    side.edges.push_back(std::move(e));
  }
  const std::size_t n = side.vertices.size();
  side.signature.assign(n, {});
  side.together.assign(n, std::vector<std::size_t>(n, 0));
  for (const auto& e : side.edges) {
    const auto members = e.to_vector();
    for (Vertex u : members) {
      side.signature[u].push_back(members.size());
      for (Vertex w : members) ++side.together[u][w];
    }
  }
  for (auto& s : side.signature) std::sort(s.begin(), s.end());
  return side;
}

class IsoSearch {
 public:
  IsoSearch(const IsoSide& a, const IsoSide& b) : a_(a), b_(b), image_(a.vertices.size()),
                                                  used_(b.vertices.size(), false) {
    for (const auto& e : b_.edges) target_.insert(e);
  }

  bool run() { return extend(0); }
  const std::vector<Vertex>& image() const { return image_; }

 private:
  bool extend(Vertex u) {
    if (u == a_.vertices.size()) return edges_match();
    for (Vertex x = 0; x < b_.vertices.size(); ++x) {
      if (used_[x] || a_.signature[u] != b_.signature[x]) continue;
      if (a_.together[u][u] != b_.together[x][x]) continue;
      bool consistent = true;
      for (Vertex w = 0; w < u && consistent; ++w) {
        consistent = a_.together[u][w] == b_.together[x][image_[w]];
      }
      if (!consistent) continue;
      image_[u] = x;
      used_[x] = true;
      if (extend(u + 1)) return true;
      used_[x] = false;
    }
    return false;
  }

  bool edges_match() const {
    for (const auto& e : a_.edges) {
      Edge mapped;
      for (Vertex v : e) mapped.insert(image_[v]);
      if (!target_.contains(mapped)) return false;
    }
    return true;
  }

  const IsoSide& a_;
  const IsoSide& b_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::unordered_set<Edge, VertexSetHash> target_;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const FiniteHypergraph& a, const FiniteHypergraph& b,
                                          IsomorphismOptions opts) {
  const std::size_t na = a.vertices().size();
  const std::size_t nb = b.vertices().size();
  if (na > opts.max_vertices || nb > opts.max_vertices) {
    throw SizeLimit("isomorphism search is limited to " + std::to_string(opts.max_vertices) +
                    " vertices");
  }
  if (na != nb || a.distinct_count() != b.distinct_count()) return std::nullopt;

  const IsoSide sa = prepare(a);
  const IsoSide sb = prepare(b);
  IsoSearch search(sa, sb);
  if (!search.run()) return std::nullopt;
  VertexMap f;
  for (Vertex u = 0; u < sa.vertices.size(); ++u) {
    f.emplace(sa.vertices[u], sb.vertices[search.image()[u]]);
  }
  return f;
}

bool is_isomorphic(const FiniteHypergraph& a, const FiniteHypergraph& b, IsomorphismOptions opts) {
  return find_isomorphism(a, b, opts).has_value();
}

}  // namespace mincover
