#include "mincover/io.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "mincover/error.hpp"

namespace mincover {

namespace {
constexpr std::string_view kEmptyKeyword = "empty";
}

FiniteHypergraph parse_hypergraph(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> ids;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> members;
    for (std::string tok; tokens >> tok;) members.push_back(std::move(tok));
    if (members.empty()) continue;

    Edge e;
    if (members.size() == 1 && members[0] == kEmptyKeyword) {
      edges.push_back(std::move(e));
      continue;
    }
    for (auto& tok : members) {
      if (tok == kEmptyKeyword) {
        throw ParseError(lineno, "'empty' must stand alone on its line");
      }
      auto [it, inserted] = ids.try_emplace(tok, static_cast<Vertex>(labels.size()));
      if (inserted) labels.push_back(tok);
      e.insert(it->second);
    }
    edges.push_back(std::move(e));
  }
  if (in.bad()) throw ParseError(lineno, "read error");
  return FiniteHypergraph(std::move(edges), std::move(labels));
}

FiniteHypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const FiniteHypergraph& h) {
  for (const auto& e : h.edges()) {
    if (e.empty()) {
      out << kEmptyKeyword << '\n';
      continue;
    }
    bool first = true;
    for (Vertex v : e) {
      if (!first) out << ' ';
      out << h.label(v);
      first = false;
    }
    out << '\n';
  }
}

std::string serialize_hypergraph(const FiniteHypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

void write_truncation(std::ostream& out, const LazyHypergraph& l, const Truncation& t) {
  const auto& meta = l.metadata();
  out << "# generator: " << l.name() << '\n';
  out << "# edges: " << t.hypergraph.size() << '\n';
  if (meta.known_point_finite) out << "# known-point-finite\n";
  if (meta.known_bounded_width) out << "# known-bounded-width\n";
  if (meta.known_no_minimal_cover) out << "# known-no-minimal-cover\n";
  if (!meta.provenance.empty()) out << "# provenance: " << meta.provenance << '\n';
  for (Vertex v : t.hypergraph.vertices()) {
    const std::string label = l.label(v);
    if (label != std::to_string(v)) out << "# vertex " << v << " = " << label << '\n';
  }
  // Tokens are raw ids; the label table above maps them back.
  write_hypergraph(out, FiniteHypergraph(t.hypergraph.edges()));
}

FiniteHypergraph random_hypergraph(std::mt19937_64& rng, const RandomShape& shape) {
  std::uniform_int_distribution<std::size_t> edge_count(shape.min_edges, shape.max_edges);
  const std::size_t width_cap = std::min(shape.max_width, shape.max_vertices);
  std::uniform_int_distribution<std::size_t> edge_size(1, std::max<std::size_t>(width_cap, 1));

  std::vector<Vertex> pool(shape.max_vertices);
  std::iota(pool.begin(), pool.end(), Vertex{0});

  const std::size_t m = edge_count(rng);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = std::min(edge_size(rng), pool.size());
    // Partial Fisher-Yates: the first k entries become a uniform k-subset.
    for (std::size_t j = 0; j < k; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, pool.size() - 1);
      std::swap(pool[j], pool[pick(rng)]);
    }
    edges.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return FiniteHypergraph(std::move(edges));
}

}  // namespace mincover
