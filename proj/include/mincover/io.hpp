#pragma once

#include <iosfwd>
#include <random>
#include <string>

#include "mincover/core.hpp"
#include "mincover/countable.hpp"

namespace mincover {

/// Reads the line-oriented edge format: one edge per line, whitespace
/// separated vertex labels, '#' starts a comment, blank lines are skipped
/// and a lone `empty` is the empty edge. Labels get dense ids in order of
/// first appearance. Throws ParseError.
FiniteHypergraph parse_hypergraph(std::istream& in);
FiniteHypergraph parse_hypergraph(const std::string& text);

/// Writes `h` in the format read by parse_hypergraph, members in ascending
/// id order.
void write_hypergraph(std::ostream& out, const FiniteHypergraph& h);
std::string serialize_hypergraph(const FiniteHypergraph& h);

/// Writes a truncation with a comment header naming the generator and
/// mapping every vertex id token to its external label.
void write_truncation(std::ostream& out, const LazyHypergraph& l, const Truncation& t);

struct RandomShape {
  std::size_t min_edges = 1;
  std::size_t max_edges = 30;
  std::size_t max_vertices = 20;
  std::size_t max_width = 6;
};

/// Random family of nonempty edges over vertex ids [0, max_vertices), each
/// of size 1..max_width.
FiniteHypergraph random_hypergraph(std::mt19937_64& rng, const RandomShape& shape = {});

}  // namespace mincover
