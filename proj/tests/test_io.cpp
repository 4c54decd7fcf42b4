#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "mincover/countable.hpp"
#include "mincover/error.hpp"
#include "mincover/io.hpp"

using namespace mincover;

namespace {

std::vector<std::set<std::string>> labelled(const FiniteHypergraph& h) {
  std::vector<std::set<std::string>> out;
  for (const auto& e : h.edges()) {
    std::set<std::string> s;
    for (Vertex v : e) s.insert(h.label(v));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("parse: comments, blank lines and the empty keyword") {
  const auto h = parse_hypergraph(
      "# header\n"
      "\n"
      "a b   # trailing comment\n"
      "   \n"
      "empty\n"
      "b c\n");
  REQUIRE(h.size() == 3);
  CHECK(h.edge(0) == VertexSet{0, 1});
  CHECK(h.edge(1).empty());
  CHECK(h.edge(2) == VertexSet{1, 2});
  CHECK(h.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(h.label(2) == "c");
}

TEST_CASE("parse: labels get ids in first-appearance order") {
  const auto h = parse_hypergraph("5 3\n3 7\n");
  CHECK(h.edge(0) == VertexSet{0, 1});
  CHECK(h.edge(1) == VertexSet{1, 2});
  CHECK(h.label(0) == "5");
  CHECK(h.label(1) == "3");
  CHECK(h.label(2) == "7");
}

TEST_CASE("parse: repeated tokens on a line collapse") {
  CHECK(parse_hypergraph("x x y\n").edge(0).size() == 2);
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_hypergraph("0 1\n# fine\n0 empty\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK(parse_hypergraph("").size() == 0);
  CHECK(parse_hypergraph("# only comments\n\n").size() == 0);
}

TEST_CASE("serialize writes labels and the empty keyword") {
  const auto h = parse_hypergraph("b a\nempty\n");
  CHECK(serialize_hypergraph(h) == "b a\nempty\n");
  CHECK(serialize_hypergraph(FiniteHypergraph{{0, 2}, {}}) == "0 2\nempty\n");
}

TEST_CASE("round trip on random files") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    auto h = random_hypergraph(rng, {1, 15, 12, 5});
    if (trial % 4 == 0) {
      auto edges = h.edges();
      edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(edges.size() / 2), Edge{});
      h = FiniteHypergraph(std::move(edges));
    }
    const auto once = parse_hypergraph(serialize_hypergraph(h));
    REQUIRE(once.size() == h.size());
    CHECK(labelled(once) == labelled(h));
    // A parsed file is a fixed point: ids and labels survive exactly.
    const auto twice = parse_hypergraph(serialize_hypergraph(once));
    CHECK(twice.edges() == once.edges());
    CHECK(twice.labels() == once.labels());
  }
}

TEST_CASE("write_truncation header and body") {
  std::ostringstream out;
  const auto l = gen_domotor();
  write_truncation(out, l, truncate(l, 2));
  const std::string text = out.str();
  CHECK(text.find("# generator: domotor\n") != std::string::npos);
  CHECK(text.find("# edges: 2\n") != std::string::npos);
  CHECK(text.find("# known-no-minimal-cover\n") != std::string::npos);
  CHECK(text.find("# vertex 3 = -2\n") != std::string::npos);
  CHECK(text.find("# vertex 4 = 2\n") != std::string::npos);
  CHECK(text.find("# vertex 0 = 0\n") == std::string::npos);

  const auto h = parse_hypergraph(text);
  REQUIRE(h.size() == 2);
  std::set<std::string> a(labelled(h)[0]);
  CHECK(a == std::set<std::string>{"0", "1", "3", "4"});

  std::ostringstream omega;
  const auto o = gen_omega();
  write_truncation(omega, o, truncate(o, 4));
  const auto body = omega.str().substr(omega.str().find("\nempty\n") + 1);
  CHECK(body == "empty\n0\n0 1\n0 1 2\n");
}
