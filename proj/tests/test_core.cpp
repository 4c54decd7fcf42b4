#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mincover/core.hpp"
#include "mincover/countable.hpp"
#include "mincover/error.hpp"
#include "mincover/io.hpp"

using namespace mincover;

namespace {

VertexSet vs(std::initializer_list<Vertex> l) { return VertexSet(l); }

std::vector<Edge> edge_list(const FiniteHypergraph& h) { return h.edges(); }

}  // namespace

TEST_CASE("VertexSet basics") {
  VertexSet s{3, 70, 1};
  CHECK(s.size() == 3);
  CHECK(s.min() == 1);
  CHECK(s.max() == 70);
  CHECK(s.to_vector() == std::vector<Vertex>{1, 3, 70});
  s.erase(70);
  CHECK(s == vs({1, 3}));
  CHECK((vs({1, 2}) | vs({200})).size() == 3);
  CHECK((vs({1, 2, 200}) & vs({2, 200})) == vs({2, 200}));
  CHECK((vs({1, 200}) - vs({200})) == vs({1}));
  CHECK(vs({1}).is_subset_of(vs({0, 1})));
  CHECK_FALSE(vs({1, 300}).is_subset_of(vs({0, 1})));
  CHECK(VertexSet{}.is_subset_of(VertexSet{}));
  CHECK(vs({0, 1}) < vs({0, 2}));
  CHECK(vs({0}) < vs({0, 1}));
}

TEST_CASE("vertex_set is the union of the edges") {
  CHECK(vertex_set(FiniteHypergraph{{0, 1}, {1, 2}}) == vs({0, 1, 2}));
  CHECK(vertex_set(FiniteHypergraph{}).empty());
  CHECK(vertex_set(FiniteHypergraph{{}, {}}).empty());
  const auto omega = truncate(gen_omega(), 6).hypergraph;
  CHECK(vertex_set(omega) == vs({0, 1, 2, 3, 4}));
}

TEST_CASE("restrict_to keeps order and count") {
  const FiniteHypergraph h{{0, 1}, {1, 2}};
  const auto r = restrict_to(h, vs({1}));
  CHECK(edge_list(r.traces) == std::vector<Edge>{vs({1}), vs({1})});
  CHECK(r.source == IndexSet{0, 1});

  const auto empty = restrict_to(FiniteHypergraph{{0, 1}}, VertexSet{});
  CHECK(empty.traces.size() == 1);
  CHECK(empty.traces.edge(0).empty());
}

TEST_CASE("restrict_to on the first two Domotor edges") {
  const auto h = truncate(gen_domotor(), 2).hypergraph;
  const VertexSet window{encode_integer(0), encode_integer(1), encode_integer(2)};
  const auto r = restrict_to(h, window);
  // A_2 = [-2,0] u {2} -> {0,2}; B_2 = {-2} u [0,2] -> {0,1,2}
  CHECK(r.traces.edge(0) == VertexSet{encode_integer(0), encode_integer(2)});
  CHECK(r.traces.edge(1) == window);
}

TEST_CASE("subfamily selectors") {
  const FiniteHypergraph h{{0, 1}, {1, 2}, {2}};
  CHECK(sub_containing(h, vs({1})) == IndexSet{0, 1});
  CHECK(sub_containing(h, {}) == IndexSet{0, 1, 2});
  CHECK(sub_containing(h, vs({0, 2})).empty());

  CHECK(sub_disjoint(h, vs({1})) == IndexSet{2});
  CHECK(sub_disjoint(h, {}) == IndexSet{0, 1, 2});
  CHECK(sub_disjoint(FiniteHypergraph{{0}, {}}, vs({0})) == IndexSet{1});

  const FiniteHypergraph g{{0, 1}, {1, 2}};
  CHECK(sub_cont_disj(g, vs({1}), vs({2})) == IndexSet{0});
  CHECK(sub_cont_disj(g, vs({1}), vs({0, 2})).empty());
  CHECK(sub_cont_disj(g, {}, {}) == IndexSet{0, 1});
}

TEST_CASE("maximal_edges") {
  CHECK(maximal_edges(FiniteHypergraph{{0}, {0, 1}, {2}}) == IndexSet{1, 2});
  CHECK(maximal_edges(truncate(gen_omega(), 6).hypergraph) == IndexSet{5});
  // Domotor edges for n = 2, 3 are pairwise incomparable.
  CHECK(maximal_edges(truncate(gen_domotor(), 4).hypergraph) == IndexSet{0, 1, 2, 3});
  CHECK(maximal_edges(FiniteHypergraph{{0, 1}, {0}, {0, 1}}) == IndexSet{0, 2});
  CHECK(maximal_edges(FiniteHypergraph{{}, {}}) == IndexSet{0, 1});
}

TEST_CASE("duplicate edges share a representative") {
  const FiniteHypergraph h{{1, 2}, {0}, {1, 2}, {}, {}};
  CHECK(h.representative(2) == 0);
  CHECK(h.representative(4) == 3);
  CHECK(h.distinct_indices() == IndexSet{0, 1, 3});
  CHECK(h.distinct_count() == 3);
  CHECK(h.width() == 2);
}

TEST_CASE("isomorphism examples") {
  const auto f = find_isomorphism(FiniteHypergraph{{0, 1}}, FiniteHypergraph{{5, 7}});
  REQUIRE(f);
  CHECK(f->size() == 2);
  CHECK(((f->at(0) == 5 && f->at(1) == 7) || (f->at(0) == 7 && f->at(1) == 5)));

  CHECK(is_isomorphic(FiniteHypergraph{{0}, {0, 1}}, FiniteHypergraph{{0, 1}, {1}}));
  CHECK_FALSE(is_isomorphic(FiniteHypergraph{{0, 1}}, FiniteHypergraph{{0}, {1}}));
  // Duplicates collapse before comparing.
  CHECK(is_isomorphic(FiniteHypergraph{{0, 1}, {0, 1}}, FiniteHypergraph{{2, 3}}));
  CHECK(is_isomorphic(FiniteHypergraph{}, FiniteHypergraph{}));
  CHECK_FALSE(is_isomorphic(FiniteHypergraph{{}}, FiniteHypergraph{}));
  // Both 2-regular on six vertices: a hexagon is not two triangles.
  CHECK_FALSE(is_isomorphic(FiniteHypergraph{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}},
                            FiniteHypergraph{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
}

TEST_CASE("isomorphism rejects large inputs") {
  std::vector<Edge> big;
  for (Vertex v = 0; v < 11; ++v) big.push_back(vs({v}));
  const FiniteHypergraph h(big);
  CHECK_THROWS_AS(is_isomorphic(h, h), SizeLimit);
  CHECK(is_isomorphic(h, h, IsomorphismOptions{11}));
}

TEST_CASE("properties on random inputs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = random_hypergraph(rng, {1, 8, 8, 4});
    std::uniform_int_distribution<Vertex> vd(0, 9);
    VertexSet a, b, a2;
    for (int j = 0; j < 3; ++j) {
      a.insert(vd(rng));
      b.insert(vd(rng));
      a2.insert(vd(rng));
    }
    if (trial % 3 == 0) a.clear();

    // Selector composition.
    const IndexSet cont = sub_containing(h, a);
    const IndexSet disj = sub_disjoint(h, b);
    IndexSet both;
    std::set_intersection(cont.begin(), cont.end(), disj.begin(), disj.end(),
                          std::back_inserter(both));
    CHECK(sub_cont_disj(h, a, b) == both);

    // Iterated restriction.
    const auto twice = restrict_to(restrict_to(h, a).traces, a2).traces;
    const auto once = restrict_to(h, a & a2).traces;
    CHECK(twice.edges() == once.edges());

    // Maximal edges, exhaustively.
    const IndexSet maxi = maximal_edges(h);
    for (EdgeIndex i = 0; i < h.size(); ++i) {
      bool strictly_inside = false;
      for (EdgeIndex j = 0; j < h.size(); ++j) {
        strictly_inside = strictly_inside ||
                          (h.edge(i).is_subset_of(h.edge(j)) && h.edge(i) != h.edge(j));
      }
      CHECK(std::binary_search(maxi.begin(), maxi.end(), i) == !strictly_inside);
    }

    // Isomorphism: reflexive and invariant under relabeling.
    const auto verts = h.vertices().to_vector();
    if (verts.size() > 8) continue;
    std::vector<Vertex> perm(verts.size());
    std::iota(perm.begin(), perm.end(), Vertex{20});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabeled;
    for (const auto& e : h.edges()) {
      Edge m;
      for (Vertex v : e) {
        m.insert(perm[static_cast<std::size_t>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin())]);
      }
      relabeled.push_back(m);
    }
    std::shuffle(relabeled.begin(), relabeled.end(), rng);
    const FiniteHypergraph g(relabeled);
    CHECK(is_isomorphic(h, h));
    const auto f = find_isomorphism(h, g);
    REQUIRE(f);
    // The witness bijection maps the edge family onto the other.
    std::set<std::vector<Vertex>> image, target;
    for (const auto& e : h.edges()) {
      std::vector<Vertex> m;
      for (Vertex v : e) m.push_back(f->at(v));
      std::sort(m.begin(), m.end());
      image.insert(m);
    }
    for (const auto& e : g.edges()) target.insert(e.to_vector());
    CHECK(image == target);
    CHECK(is_isomorphic(g, h));
  }
}

TEST_CASE("isomorphism is symmetric on random pairs") {
  std::mt19937_64 rng(7);
  int agree = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_hypergraph(rng, {2, 4, 5, 3});
    const auto b = random_hypergraph(rng, {2, 4, 5, 3});
    const bool ab = is_isomorphic(a, b);
    CHECK(ab == is_isomorphic(b, a));
    agree += ab ? 1 : 0;
  }
  MESSAGE("isomorphic random pairs: " << agree);
}
