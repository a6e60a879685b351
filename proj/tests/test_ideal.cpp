#include <doctest.h>

#include <random>
#include <set>

#include "splitgraph/errors.hpp"
#include "splitgraph/families.hpp"
#include "splitgraph/monomial.hpp"

#include "oracles.hpp"

using namespace splitgraph;

namespace {

Monomial mono(const char* s) { return Monomial::parse(s); }

Monomial random_monomial(std::mt19937& rng, int max_index, int max_exp) {
  std::vector<std::pair<int, int>> terms;
  for (int i = 1; i <= max_index; ++i)
    if (rng() % 3 == 0) terms.emplace_back(i, 1 + static_cast<int>(rng() % max_exp));
  if (terms.empty()) terms.emplace_back(1 + static_cast<int>(rng() % max_index), 1);
  return Monomial::from_pairs(std::move(terms));
}

}  // namespace

TEST_CASE("monomial text form") {
  CHECK(mono("x1^2*x4^3*x7").str() == "x1^2*x4^3*x7");
  CHECK(mono("x7*x1").str() == "x1*x7");
  CHECK(mono("1").is_unit());
  CHECK(mono("x3").degree() == 1);
  CHECK(mono("x1^2*x4^3*x7").degree() == 6);
  CHECK_THROWS_AS(Monomial::parse("y2"), ParseError);
  CHECK_THROWS_AS(Monomial::parse("x1**x2"), ParseError);
  CHECK(mono("x2*x5").divides(mono("x1*x2*x5")));
  CHECK(!mono("x2^2").divides(mono("x2*x5")));
}

TEST_CASE("edge ideals") {
  MonomialIdeal p3 = edge_ideal(path_graph(3));
  REQUIRE(p3.gens().size() == 2);
  CHECK(p3.gens()[0].str() == "x1*x2");
  CHECK(p3.gens()[1].str() == "x2*x3");
  CHECK(p3.ambient_n() == 3);

  MonomialIdeal two_k2 = edge_ideal(Graph(4, {{1, 2}, {3, 4}}));
  CHECK(two_k2.gens()[0].str() == "x1*x2");
  CHECK(two_k2.gens()[1].str() == "x3*x4");

  CHECK(edge_ideal(Graph(5)).is_zero());
}

TEST_CASE("stretching single monomials") {
  CHECK(stretch(mono("x1*x3*x5"), 1).str() == "x1*x4*x7");
  CHECK(stretch(mono("x1^2*x4^3*x7"), 1).str() == "x1*x2*x6*x7*x8*x12");
  for (int t = 1; t <= 5; ++t) CHECK(stretch(mono("x9"), t).str() == "x9");
  CHECK_THROWS_AS(stretch(mono("x1*x2"), 0), std::invalid_argument);
}

TEST_CASE("stretch preserves degree, separates monomials, and squarefrees") {
  std::mt19937 rng(41);
  for (int t = 1; t <= 3; ++t) {
    std::set<Monomial> images;
    std::set<Monomial> inputs;
    for (int trial = 0; trial < 60; ++trial) {
      Monomial u = random_monomial(rng, 6, 3);
      if (!inputs.insert(u).second) continue;
      Monomial s = stretch(u, t);
      CHECK(s.degree() == u.degree());
      CHECK(s.is_squarefree());
      // Injectivity within a fixed degree: collect by degree.
      CHECK(images.insert(s).second);
    }
  }
}

TEST_CASE("stretch composes generator-wise at safe gaps") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    int s = 1 + static_cast<int>(rng() % 3);
    int t = 1 + static_cast<int>(rng() % 3);
    // Squarefree input whose index gaps exceed s + t.
    std::vector<std::pair<int, int>> terms;
    int idx = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < 4; ++k) {
      terms.emplace_back(idx, 1);
      idx += s + t + 1 + static_cast<int>(rng() % 3);
    }
    Monomial u = Monomial::from_pairs(terms);
    CHECK(stretch(stretch(u, t), s) == stretch(u, s + t));
  }
}

TEST_CASE("stretching ideals") {
  MonomialIdeal mixed(9, {mono("x1*x3*x5"), mono("x1^2*x4^3*x7")});
  MonomialIdeal stretched = stretch_ideal(mixed, 1);
  REQUIRE(stretched.gens().size() == 2);
  CHECK(stretched.gens()[0].str() == "x1*x2*x6*x7*x8*x12");
  CHECK(stretched.gens()[1].str() == "x1*x4*x7");
  CHECK(stretched.ambient_n() == 12);

  MonomialIdeal p3(3, {mono("x1*x2"), mono("x2*x3")});
  MonomialIdeal p3s = stretch_ideal(p3, 1);
  REQUIRE(p3s.gens().size() == 2);
  CHECK(p3s.gens()[0].str() == "x1*x3");
  CHECK(p3s.gens()[1].str() == "x2*x4");
  CHECK(p3s.ambient_n() == 4);

  // Zero ideal maps to itself.
  MonomialIdeal zero(5, {});
  CHECK(stretch_ideal(zero, 3) == zero);

  // One application of sigma already squarefrees every generator.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> gens;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i)
      gens.push_back(random_monomial(rng, 5, 3));
    MonomialIdeal ideal(8, std::move(gens));
    CHECK(stretch_ideal(ideal, 1).is_squarefree());
  }

  // Huge t pushes the non-lowest indices of distinct generators apart.
  MonomialIdeal sf(6, {mono("x1*x2"), mono("x2*x3"), mono("x4*x6")});
  MonomialIdeal far = stretch_ideal(sf, 100);
  std::set<int> high_indices;
  for (const Monomial& g : far.gens()) {
    REQUIRE(g.terms().size() == 2);
    CHECK(g.terms()[1].first > 100);
    CHECK(high_indices.insert(g.terms()[1].first).second);
  }

  // Stretching can create divisibility between images of incomparable
  // generators; the image set is re-minimalized but the ambient ring still
  // covers every stretched index.
  MonomialIdeal shrink(6, {mono("x5"), mono("x1*x4*x6")});
  MonomialIdeal shrunk = stretch_ideal(shrink, 1);  // images x5 and x1*x5*x8
  REQUIRE(shrunk.gens().size() == 1);
  CHECK(shrunk.gens()[0].str() == "x5");
  CHECK(shrunk.ambient_n() == 8);
}

TEST_CASE("colon by a linear difference") {
  // Path on 4: the new product x2*x3 is already a generator.
  MonomialIdeal colon_p4 = colon_by_linear_difference(path_graph(4), 1, 4);
  CHECK(colon_p4 == edge_ideal(path_graph(4)));

  Graph two_k2(4, {{1, 2}, {3, 4}});
  MonomialIdeal colon_2k2 = colon_by_linear_difference(two_k2, 1, 3);
  REQUIRE(colon_2k2.gens().size() == 3);
  CHECK(colon_2k2.gens()[0].str() == "x1*x2");
  CHECK(colon_2k2.gens()[1].str() == "x2*x4");
  CHECK(colon_2k2.gens()[2].str() == "x3*x4");

  CHECK_THROWS_WITH_AS(colon_by_linear_difference(path_graph(3), 1, 3),
                       doctest::Contains("intersect"), std::invalid_argument);
}

TEST_CASE("colon equals the edge ideal exactly when all cross pairs are edges") {
  auto check_graph_pairs = [](const Graph& g) {
    const int n = g.vertex_count();
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        if (x == y || (g.closed_neighbor_mask(x) & g.closed_neighbor_mask(y))) continue;
        bool all_edges = true;
        for (int z : g.neighbors(x))
          for (int w : g.neighbors(y))
            if (!g.has_edge(z, w)) all_edges = false;
        bool colon_trivial = colon_by_linear_difference(g, x, y) == edge_ideal(g);
        CHECK(colon_trivial == all_edges);
      }
    }
  };
  // Exhaustive over labeled graphs on 4 and 5 vertices, all valid (x, y).
  for (int n = 4; n <= 5; ++n) {
    std::vector<Edge> slots;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) edges.push_back(slots[i]);
      check_graph_pairs(Graph(n, edges));
    }
  }
  // One representative per isomorphism class on 6 and 7 vertices.
  for (int n = 6; n <= 7; ++n)
    for (const Graph& g : all_graphs_up_to_iso(n)) check_graph_pairs(g);
}

TEST_CASE("minimal generators") {
  std::vector<Monomial> a = minimal_generators({mono("x1*x2"), mono("x1*x2*x3")});
  REQUIRE(a.size() == 1);
  CHECK(a[0].str() == "x1*x2");

  std::vector<Monomial> b = minimal_generators({mono("x1"), mono("x2")});
  CHECK(b.size() == 2);

  std::vector<Monomial> c =
      minimal_generators({mono("x1*x3"), mono("x2*x4"), mono("x1*x3*x4")});
  REQUIRE(c.size() == 2);
  CHECK(c[0].str() == "x1*x3");
  CHECK(c[1].str() == "x2*x4");

  CHECK_THROWS_AS(MonomialIdeal(3, {Monomial()}), std::invalid_argument);
  CHECK_THROWS_AS(MonomialIdeal(2, {mono("x5")}), std::invalid_argument);
}

TEST_CASE("Stanley-Reisner complex agrees with the independence complex") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = oracles::random_graph(rng, n, 40);
    CHECK(stanley_reisner_complex(edge_ideal(g)) == independence_complex(g));
  }
  CHECK_THROWS_AS(stanley_reisner_complex(MonomialIdeal(2, {mono("x1^2")})),
                  std::invalid_argument);
}
