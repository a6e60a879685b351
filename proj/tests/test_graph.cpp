#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "splitgraph/errors.hpp"
#include "splitgraph/families.hpp"
#include "splitgraph/graph.hpp"
#include "splitgraph/simplicial.hpp"

#include "oracles.hpp"

using namespace splitgraph;

TEST_CASE("edge list parsing") {
  Graph p3 = parse_edge_list("3 2\n1 2\n2 3\n");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(1, 2));
  CHECK(p3.has_edge(2, 3));
  CHECK(!p3.has_edge(1, 3));

  Graph isolated = parse_edge_list("1 0\n");
  CHECK(isolated.vertex_count() == 1);
  CHECK(isolated.edge_count() == 0);
  CHECK(isolated.has_isolated_vertex());

  CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n1 1\n"), doctest::Contains("loop"), ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("2 2\n1 2\n1 2\n"), doctest::Contains("duplicate"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n1 5\n"), doctest::Contains("out of range"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n1 x\n"), doctest::Contains("malformed"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n"), ParseError);  // missing edge
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);

  // Round trip through the text form.
  Graph g = parse_edge_list(write_edge_list(p3));
  CHECK(g == p3);
}

TEST_CASE("connected components") {
  CHECK(connected_components(path_graph(3)) == std::vector<std::vector<int>>{{1, 2, 3}});
  Graph gstar(6, {{1, 4}, {2, 5}, {3, 6}, {1, 6}});
  CHECK(component_count(gstar) == 2);
  Graph two_k2(4, {{1, 2}, {3, 4}});
  CHECK(component_count(two_k2) == 2);
  // Isolated vertices are singleton components.
  Graph lonely(3, {{1, 2}});
  auto comps = connected_components(lonely);
  REQUIRE(comps.size() == 2);
  CHECK(comps[1] == std::vector<int>{3});
}

TEST_CASE("class recognizers on small named graphs") {
  ClassFlags c4 = classify(cycle_graph(4));
  CHECK(c4.bipartite);
  CHECK(!c4.chordal);
  CHECK(c4.weakly_chordal);
  CHECK(c4.c5_free);
  CHECK(c4.unmixed);
  CHECK(c4.very_well_covered);
  REQUIRE(c4.vertex_decomposable.has_value());
  CHECK(!*c4.vertex_decomposable);  // the 4-cycle is not sequentially CM

  ClassFlags c5 = classify(cycle_graph(5));
  CHECK(!c5.c5_free);
  CHECK(!c5.weakly_chordal);
  REQUIRE(c5.vertex_decomposable.has_value());
  CHECK(*c5.vertex_decomposable);  // the 5-cycle is one of the two SCM cycles

  ClassFlags p4 = classify(path_graph(4));
  CHECK(p4.forest);
  CHECK(p4.chordal);
  REQUIRE(p4.vertex_decomposable.has_value());
  CHECK(*p4.vertex_decomposable);

  ClassFlags c3 = classify(cycle_graph(3));
  CHECK(c3.chordal);
  CHECK(!c3.bipartite);
  CHECK(*c3.vertex_decomposable);

  // The guard refuses instead of answering false.
  ClassFlags big = classify(path_graph(13), 12);
  CHECK(!big.vertex_decomposable.has_value());
}

TEST_CASE("chordality matches the induced-cycle oracle") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);  // up to 7
    Graph g = oracles::random_graph(rng, n, 20 + static_cast<int>(rng() % 60));
    CAPTURE(write_edge_list(g));
    CHECK(is_chordal(g) == oracles::brute_is_chordal(g));
  }
}

TEST_CASE("minimum vertex cover") {
  CHECK(min_vertex_cover(Graph(4)) == 0);
  CHECK(min_vertex_cover(path_graph(2)) == 1);
  // Frozen from the subset-scan oracle below.
  CHECK(oracles::brute_min_vertex_cover(cycle_graph(5)) == 3);
  CHECK(min_vertex_cover(cycle_graph(5)) == 3);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracles::random_graph(rng, n, 30 + static_cast<int>(rng() % 50));
    CHECK(min_vertex_cover(g) == oracles::brute_min_vertex_cover(g));
  }
}

TEST_CASE("bight") {
  CHECK(bight(path_graph(2)) == 1);
  for (int m = 1; m <= 5; ++m) CHECK(bight(star_graph(m)) == m);
  // Frozen from the minimal-cover scan oracle.
  CHECK(oracles::brute_bight(path_graph(4)) == 2);
  CHECK(bight(path_graph(4)) == 2);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracles::random_graph(rng, n, 25 + static_cast<int>(rng() % 55));
    int expected = oracles::brute_bight(g);
    CHECK(bight(g) == expected);
    // Cross-check through the complementary route.
    CHECK(oracles::brute_bight_via_independent_sets(g) == expected);
    // Sandwich invariant.
    CHECK(min_vertex_cover(g) <= bight(g));
    CHECK(bight(g) <= g.vertex_count());
  }
}

TEST_CASE("induced matching number") {
  CHECK(induced_matching_number(path_graph(2)) == 1);
  CHECK(induced_matching_number(path_graph(3)) == 1);
  CHECK(induced_matching_number(Graph(4, {{1, 2}, {3, 4}})) == 2);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = oracles::random_graph(rng, n, 30 + static_cast<int>(rng() % 40));
    CHECK(induced_matching_number(g) == oracles::brute_induced_matching(g));
  }
}

TEST_CASE("isomorphism on named graphs") {
  Graph p3 = path_graph(3);
  Graph p3_relabeled(3, {{2, 3}, {1, 3}});  // center is 3
  CHECK(are_isomorphic(p3, p3_relabeled));
  CHECK(!are_isomorphic(p3, Graph(4, {{1, 2}, {3, 4}})));  // vertex counts differ
  Graph two_triangles(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CHECK(!are_isomorphic(cycle_graph(6), two_triangles));
  CHECK_THROWS_AS(are_isomorphic(Graph(20), Graph(20), 16), CapExceededError);
}

TEST_CASE("isomorphism is relabeling-invariant and matches brute canonicalization") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g = oracles::random_graph(rng, n, 20 + static_cast<int>(rng() % 60));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, Labeling(perm));
    CHECK(are_isomorphic(g, h));

    Graph other = oracles::random_graph(rng, n, 20 + static_cast<int>(rng() % 60));
    bool expected = oracles::brute_canonical(g) == oracles::brute_canonical(other);
    CHECK(are_isomorphic(g, other) == expected);
  }
}

TEST_CASE("isomorphism is an equivalence relation on a finite set") {
  std::mt19937 rng(23);
  std::vector<Graph> pool;
  for (int i = 0; i < 12; ++i) pool.push_back(oracles::random_graph(rng, 5, 40));
  for (const Graph& a : pool) CHECK(are_isomorphic(a, a));
  for (const Graph& a : pool)
    for (const Graph& b : pool) CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
  for (const Graph& a : pool)
    for (const Graph& b : pool)
      for (const Graph& c : pool)
        if (are_isomorphic(a, b) && are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
}

TEST_CASE("independence complex") {
  SimplicialComplex k2 = independence_complex(path_graph(2));
  CHECK(k2.all_faces() == std::vector<std::uint64_t>{0, 1, 2});

  SimplicialComplex free3 = independence_complex(Graph(3));
  CHECK(free3.facets() == std::vector<std::uint64_t>{0b111});

  SimplicialComplex c4 = independence_complex(cycle_graph(4));
  CHECK(c4.facets() == std::vector<std::uint64_t>{0b0101, 0b1010});  // the two diagonals

  // Faces are exactly the subsets containing no edge.
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = oracles::random_graph(rng, n, 30);
    SimplicialComplex ind = independence_complex(g);
    for (std::uint64_t mask = 0;; ++mask) {
      CHECK(ind.has_face(mask) == oracles::is_independent(g, mask));
      if (mask == g.full_mask()) break;
    }
  }
}

TEST_CASE("classify implication chain on enumerated graphs") {
  for (const Graph& g : connected_graphs_up_to_edges(5)) {
    ClassFlags f = classify(g);
    if (f.forest) CHECK(f.chordal);
    if (f.chordal) CHECK(f.weakly_chordal);
    if (f.weakly_chordal) CHECK(f.c5_free);
  }
  // The same chain over every graph on at most 8 vertices, recognizers only.
  long long forests = 0, chordals = 0;
  for (const Graph& g : all_graphs_up_to_iso_max(8)) {
    bool forest = is_forest(g), chordal = is_chordal(g);
    if (forest) {
      ++forests;
      CHECK(chordal);
    }
    if (chordal) {
      ++chordals;
      CHECK(is_weakly_chordal(g));
    }
  }
  CHECK(forests == 155);    // unlabeled forests on 1..8 vertices
  CHECK(chordals == 2650);  // unlabeled chordal graphs on 1..8 vertices
}
