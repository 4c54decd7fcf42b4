#include "mincover/countable.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "mincover/error.hpp"

namespace mincover {

LazyHypergraph::LazyHypergraph(std::string name, EdgeFn edge_at, LazyMetadata meta,
                               std::optional<std::size_t> edge_count, LabelFn label)
    : name_(std::move(name)),
      edge_at_(std::move(edge_at)),
      meta_(std::move(meta)),
      count_(edge_count),
      label_(std::move(label)) {}

Edge LazyHypergraph::edge_at(std::size_t i) const {
  if (count_ && i >= *count_) {
    throw std::out_of_range(name_ + " has only " + std::to_string(*count_) + " edges");
  }
  return edge_at_(i);
}

std::string LazyHypergraph::label(Vertex v) const {
  return label_ ? label_(v) : std::to_string(v);
}

Vertex encode_integer(std::int64_t z) {
  if (z >= 0) return static_cast<Vertex>(2 * z);
  return static_cast<Vertex>(-2 * z - 1);
}

std::int64_t decode_integer(Vertex id) {
  const auto k = static_cast<std::int64_t>(id);
  return k % 2 == 0 ? k / 2 : -(k + 1) / 2;
}

LazyHypergraph gen_omega() {
  LazyMetadata meta;
  meta.known_no_minimal_cover = true;
  meta.provenance = "finite ordinals: each edge is a proper subset of the next";
  return LazyHypergraph("omega", [](std::size_t n) {
    Edge e;
    for (std::size_t i = 0; i < n; ++i) e.insert(static_cast<Vertex>(i));
    return e;
  }, std::move(meta));
}

LazyHypergraph gen_domotor() {
  LazyMetadata meta;
  meta.known_no_minimal_cover = true;
  meta.provenance = "Domotor's example: pairwise incomparable cover of Z without a minimal subcover";
  auto edge = [](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i / 2 + 2);
    Edge e;
    if (i % 2 == 0) {
      for (std::int64_t z = -n; z <= 0; ++z) e.insert(encode_integer(z));
      e.insert(encode_integer(n));
    } else {
      e.insert(encode_integer(-n));
      for (std::int64_t z = 0; z <= n; ++z) e.insert(encode_integer(z));
    }
    return e;
  };
  auto label = [](Vertex v) { return std::to_string(decode_integer(v)); };
  return LazyHypergraph("domotor", edge, std::move(meta), std::nullopt, label);
}

LazyHypergraph gen_lattice_lines(std::int64_t r, LatticeOptions opts) {
  if (r < 1) throw std::invalid_argument("grid radius must be positive");
  if (r > opts.max_radius) {
    throw SizeLimit("grid radius " + std::to_string(r) + " exceeds " +
                    std::to_string(opts.max_radius));
  }
  const std::int64_t side = 2 * r + 1;
  auto id_of = [&](std::int64_t x, std::int64_t y) {
    return static_cast<Vertex>((y + r) * side + (x + r));
  };

  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t y = -r; y <= r; ++y) {
    for (std::int64_t x = -r; x <= r; ++x) points.emplace_back(x, y);
  }

  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Edge> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const auto [x0, y0] = points[i];
      const auto [x1, y1] = points[j];
      std::int64_t a = y1 - y0;
      std::int64_t b = x0 - x1;
      const std::int64_t g = std::gcd(a, b);
      a /= g;
      b /= g;
      if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
      }
      Edge& line = lines[{a, b, a * x0 + b * y0}];
      line.insert(id_of(x0, y0));
      line.insert(id_of(x1, y1));
    }
  }

  auto edges = std::make_shared<std::vector<Edge>>();
  edges->reserve(lines.size());
  for (auto& [key, e] : lines) edges->push_back(std::move(e));

  LazyMetadata meta;
  meta.known_point_finite = true;
  meta.known_bounded_width = true;
  meta.provenance = "finite family: two distinct lines share at most one grid point";
  auto label = [r, side](Vertex v) {
    const auto k = static_cast<std::int64_t>(v);
    return "(" + std::to_string(k % side - r) + "," + std::to_string(k / side - r) + ")";
  };
  const std::size_t count = edges->size();
  return LazyHypergraph("lines", [edges](std::size_t i) { return (*edges)[i]; }, std::move(meta),
                        count, label);
}

Truncation truncate(const LazyHypergraph& l, std::size_t k) {
  if (l.edge_count()) k = std::min(k, *l.edge_count());
  std::vector<Edge> edges;
  edges.reserve(k);
  Truncation t;
  t.lazy_index.reserve(k);
  VertexSet used;
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back(l.edge_at(i));
    used |= edges.back();
    t.lazy_index.push_back(i);
  }
  std::vector<std::string> labels(used.empty() ? 0 : used.max() + 1);
  for (Vertex v : used) labels[v] = l.label(v);
  t.hypergraph = FiniteHypergraph(std::move(edges), std::move(labels));
  return t;
}

namespace {

// Depth-first search over edge sequences. With F_1..F_j chosen, the
// admissible choices for v_i are
//   pending_[i] = (F_{i+1} n ... n F_j) \ (F_1 u ... u F_i),
// and a prefix is viable only while every pending_[i] is nonempty.
class StaircaseSearch {
 public:
  StaircaseSearch(const FiniteHypergraph& h, std::size_t depth) : h_(h), depth_(depth) {}

  std::optional<OmegaWitness> run() {
    if (!extend()) return std::nullopt;
    OmegaWitness w;
    w.edge_indices = chosen_;
    for (const auto& p : pending_) w.omega.push_back(p.min());
    return w;
  }

 private:
  bool extend() {
    if (chosen_.size() == depth_) return true;
    for (EdgeIndex e = 0; e < h_.size(); ++e) {
      const Edge& edge = h_.edge(e);
      VertexSet fresh = edge - covered_;
      if (fresh.empty()) continue;
      std::vector<VertexSet> narrowed;
      narrowed.reserve(pending_.size() + 1);
      bool viable = true;
      for (const auto& p : pending_) {
        narrowed.push_back(p & edge);
        if (narrowed.back().empty()) {
          viable = false;
          break;
        }
      }
      if (!viable) continue;
      narrowed.push_back(std::move(fresh));

      auto saved_pending = std::exchange(pending_, std::move(narrowed));
      const VertexSet saved_covered = covered_;
      covered_ |= edge;
      chosen_.push_back(e);
      if (extend()) return true;
      chosen_.pop_back();
      covered_ = saved_covered;
      pending_ = std::move(saved_pending);
    }
    return false;
  }

  const FiniteHypergraph& h_;
  std::size_t depth_;
  IndexSet chosen_;
  VertexSet covered_;
  std::vector<VertexSet> pending_;
};

}  // namespace

std::optional<OmegaWitness> find_omega_witness(const FiniteHypergraph& h, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("witness depth must be at least 1");
  return StaircaseSearch(h, depth).run();
}

std::string validate_witness(const FiniteHypergraph& h, const OmegaWitness& w) {
  const std::size_t k = w.omega.size();
  if (k == 0) return "empty witness";
  if (w.edge_indices.size() != k) return "vertex and edge counts differ";
  const VertexSet omega(w.omega.begin(), w.omega.end());
  if (omega.size() != k) return "witness vertices are not distinct";
  IndexSet sorted = w.edge_indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "witness edges are not distinct";
  }
  VertexSet segment;
  for (std::size_t i = 0; i < k; ++i) {
    if (w.edge_indices[i] >= h.size()) return "edge index out of range";
    segment.insert(w.omega[i]);
    if ((h.edge(w.edge_indices[i]) & omega) != segment) {
      return "edge " + std::to_string(w.edge_indices[i]) + " does not trace the initial segment of length " +
             std::to_string(i + 1);
    }
  }
  return {};
}

FiniteHypergraph witness_subhypergraph(const FiniteHypergraph& h, const OmegaWitness& w) {
  const VertexSet omega(w.omega.begin(), w.omega.end());
  return restrict_to(h, w.edge_indices, omega).traces;
}

LocalConstruction local_construction(const FiniteHypergraph& h) {
  const IndexSet distinct = h.distinct_indices();
  auto union_avoiding = [&](const VertexSet& b) {
    VertexSet u;
    for (EdgeIndex i : distinct) {
      if (!h.edge(i).intersects(b)) u |= h.edge(i);
    }
    return u;
  };

  ConstructionTrace trace;
  IndexSet chosen;
  VertexSet remaining = h.vertices();
  VertexSet pivots;
  for (std::size_t n = 0; !remaining.empty(); ++n) {
    ConstructionStep step;
    step.n = n;
    step.remaining = remaining;
    step.pivot = remaining.min();
    step.earlier_pivots = pivots;

    if (!remaining.is_subset_of(union_avoiding(pivots))) {
      throw InvariantViolation("step " + std::to_string(n) +
                               ": uncovered vertex outside every edge avoiding earlier pivots");
    }
    for (EdgeIndex i : distinct) {
      const Edge& e = h.edge(i);
      if (e.contains(step.pivot) && !e.intersects(pivots)) step.pivot_family.push_back(i);
    }
    pivots.insert(step.pivot);
    step.avoiding_union = union_avoiding(pivots);
    step.local_universe = remaining - step.avoiding_union;
    step.local = restrict_to(h, step.pivot_family, step.local_universe);
    step.local_cover = greedy_minimalize(full_cover(step.local.traces)).selected();

    for (EdgeIndex j : step.local_cover) {
      step.lifted.push_back(step.pivot_family[step.local.traces.representative(j)]);
    }
    std::sort(step.lifted.begin(), step.lifted.end());
    step.lifted.erase(std::unique(step.lifted.begin(), step.lifted.end()), step.lifted.end());

    const VertexSet reached = union_of(h, step.lifted);
    if (!reached.contains(step.pivot)) {
      throw InvariantViolation("step " + std::to_string(n) + ": pivot left uncovered");
    }
    remaining -= reached;
    chosen.insert(chosen.end(), step.lifted.begin(), step.lifted.end());
    trace.steps.push_back(std::move(step));
  }

  Cover cover(h, std::move(chosen));
  if (!is_cover(cover) || !is_minimal_cover(cover).minimal) {
    throw InvariantViolation("local construction produced a non-minimal cover");
  }
  return {std::move(cover), std::move(trace)};
}

}  // namespace mincover
