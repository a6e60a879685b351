#include <doctest.h>

#include <random>
#include <set>

#include "splitgraph/errors.hpp"
#include "splitgraph/families.hpp"
#include "splitgraph/splitting.hpp"

#include "oracles.hpp"

using namespace splitgraph;

namespace {

const FieldSpec kGf2 = FieldSpec::gf(2);

SplittingMap identity_splitting(const Graph& g) {
  std::vector<int> alpha(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) alpha[static_cast<std::size_t>(v - 1)] = v;
  return SplittingMap{g, g, std::move(alpha)};
}

// An 8-vertex gadget: a 4-cycle with one subdivided branch vertex carrying
// two stars, together with a decomposing split of three of its vertices.
Graph gadget() {
  return Graph(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}, {4, 6}, {6, 7}, {6, 8}});
}

SplittingMap gadget_split() {
  // Source vertices 9, 10, 11 are split copies of 1, 3, 6.
  Graph source(11, {{1, 2}, {2, 3}, {9, 4}, {10, 4}, {4, 6}, {4, 5}, {11, 8}, {11, 7}});
  return SplittingMap{gadget(), source, {1, 2, 3, 4, 5, 6, 7, 8, 1, 3, 6}};
}

// The same gadget split into a connected source: fibers over 3 share a
// component, so neither specialness condition holds.
SplittingMap gadget_indecomposable_split() {
  Graph source(9, {{1, 3}, {2, 3}, {3, 4}, {3, 7}, {5, 7}, {6, 7}, {2, 8}, {8, 9}});
  return SplittingMap{gadget(), source, {3, 1, 4, 5, 7, 8, 6, 2, 3}};
}

}  // namespace

TEST_CASE("verify splitting") {
  SplitCheck identity = verify_splitting(identity_splitting(gadget()));
  CHECK(identity.ok);

  SplitCheck hand_built = verify_splitting(gadget_split());
  CHECK(hand_built.ok);

  CHECK(verify_splitting(gadget_indecomposable_split()).ok);

  // Two source edges collapsing onto one target edge.
  SplittingMap bad;
  bad.target = path_graph(2);
  bad.source = path_graph(3);
  bad.alpha = {1, 2, 1};
  SplitCheck collapse = verify_splitting(bad);
  CHECK(!collapse.ok);
  CHECK(collapse.reason.find("not injective") != std::string::npos);

  // Fiber map that misses a target vertex.
  SplittingMap gap;
  gap.target = Graph(3, {{1, 2}});
  gap.source = path_graph(2);
  gap.alpha = {1, 2};
  SplitCheck missing = verify_splitting(gap);
  CHECK(!missing.ok);
  CHECK(missing.reason.find("surjective") != std::string::npos);

  // An edge mapping onto a non-edge.
  SplittingMap wrong;
  wrong.target = Graph(4, {{1, 2}, {3, 4}});
  wrong.source = Graph(4, {{1, 2}, {2, 3}});
  wrong.alpha = {1, 2, 3, 4};
  CHECK(!verify_splitting(wrong).ok);
}

TEST_CASE("specialness") {
  // Identity: both conditions hold vacuously.
  Specialness identity = specialness(identity_splitting(path_graph(4)));
  CHECK(identity.condition1);
  CHECK(identity.condition2);

  // Splitting the path's center apart gives two components: condition 2
  // holds, condition 1 fails because the outer neighbors are not adjacent.
  SplittingMap split_center{path_graph(3), Graph(4, {{1, 2}, {3, 4}}), {1, 2, 2, 3}};
  Specialness sp = specialness(split_center);
  CHECK(!sp.condition1);
  CHECK(sp.condition2);
  CHECK(sp.special());

  // The connected split of the gadget satisfies neither condition.
  Specialness ind = specialness(gadget_indecomposable_split());
  CHECK(!ind.condition1);
  CHECK(!ind.condition2);

  // The decomposing split keeps every fiber across components, and the
  // proven inequalities hold for it.
  Specialness dec = specialness(gadget_split());
  CHECK(!dec.condition1);
  CHECK(dec.condition2);
  ComparisonRecord rec = compare(gadget_split(), kGf2);
  CHECK(rec.pd_ok());
  CHECK(rec.reg_ok());
  CHECK(rec.betti_ok());
  CHECK(rec.dim_ok());

  SplittingMap invalid{path_graph(2), path_graph(3), {1, 2, 1}};
  CHECK_THROWS_AS(specialness(invalid), std::invalid_argument);
}

TEST_CASE("splitting enumeration counts and shapes") {
  // Only one splitting of a single edge.
  CHECK(enumerate_splittings(path_graph(2)).size() == 1);

  // The path on three vertices: itself and the perfect split.
  std::vector<SplittingMap> p3 = enumerate_splittings(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].source == path_graph(3));
  CHECK(p3[1].source == Graph(4, {{1, 2}, {3, 4}}));

  // The triangle: one partition choice per vertex pair of edge-ends.
  CHECK(enumerate_splittings(cycle_graph(3)).size() == 8);

  // Raw counts match the product of Bell numbers.
  std::mt19937 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 4), 50);
    if (g.edge_count() > 5) continue;
    long long expected = 1;
    for (int v = 1; v <= g.vertex_count(); ++v)
      expected *= oracles::bell_number(g.degree(v));
    CHECK(splitting_count(g) == expected);
    CHECK(static_cast<long long>(enumerate_splittings(g).size()) == expected);
  }

  SplitEnumOptions tiny;
  tiny.max_total = 4;
  CHECK_THROWS_AS(enumerate_splittings(star_graph(4), tiny), CapExceededError);
}

TEST_CASE("every enumerated splitting verifies and preserves edge adjacency") {
  for (const Graph& g : connected_graphs_up_to_edges(4)) {
    for (const SplittingMap& s : enumerate_splittings(g)) {
      SplitCheck check = verify_splitting(s);
      CAPTURE(write_edge_list(s.source));
      REQUIRE(check.ok);
      // Neighboring source edges map to neighboring target edges.
      const auto& se = s.source.edges();
      for (std::size_t i = 0; i < se.size(); ++i) {
        for (std::size_t j = i + 1; j < se.size(); ++j) {
          std::uint64_t a = vertex_bit(se[i].u) | vertex_bit(se[i].v);
          std::uint64_t b = vertex_bit(se[j].u) | vertex_bit(se[j].v);
          if (!(a & b)) continue;
          auto img = [&](const Edge& e) {
            return Edge(s.alpha[static_cast<std::size_t>(e.u - 1)],
                        s.alpha[static_cast<std::size_t>(e.v - 1)]);
          };
          Edge ia = img(se[i]), ib = img(se[j]);
          std::uint64_t ma = vertex_bit(ia.u) | vertex_bit(ia.v);
          std::uint64_t mb = vertex_bit(ib.u) | vertex_bit(ib.v);
          CHECK((ma & mb) != 0);
        }
      }
    }
  }
}

TEST_CASE("a connected graph splits into every component count up to m") {
  for (const Graph& g : connected_graphs_up_to_edges(4)) {
    std::set<int> counts;
    for (const SplittingMap& s : enumerate_splittings(g))
      counts.insert(component_count(s.source));
    for (int j = 1; j <= g.edge_count(); ++j) CHECK(counts.count(j) == 1);
  }
}

TEST_CASE("splitting filters and dedupe") {
  SplitEnumOptions special2_only;
  special2_only.filter = SplitEnumOptions::Filter::special2;
  for (const SplittingMap& s : enumerate_splittings(path_graph(4), special2_only))
    CHECK(specialness(s).condition2);

  // A commuting isomorphism pins every edge preimage, so distinct partition
  // choices are never equivalent: dedupe keeps the raw stream.
  SplitEnumOptions raw;
  SplitEnumOptions dedup;
  dedup.dedupe_isomorphic = true;
  std::size_t raw_count = enumerate_splittings(star_graph(3), raw).size();
  std::size_t dedup_count = enumerate_splittings(star_graph(3), dedup).size();
  CHECK(raw_count == 5);  // Bell(3)
  CHECK(dedup_count == raw_count);

  // Renaming fiber members consistently is an equivalence the colored
  // canonical form detects: swapping the two split copies of the path's
  // center gives the same splitting.
  std::vector<int> alpha{1, 2, 2, 3};
  CanonicalForm a = canonical_form(Graph(4, {{1, 2}, {3, 4}}), alpha);
  CanonicalForm b = canonical_form(Graph(4, {{1, 3}, {2, 4}}), alpha);
  CHECK(a == b);
  // Against a structurally different colored graph they differ.
  CanonicalForm c = canonical_form(Graph(4, {{1, 2}, {2, 4}}), std::vector<int>{1, 2, 3, 2});
  CHECK(!(a == c));
}

TEST_CASE("padded isolated vertices") {
  SplitEnumOptions opt;
  opt.pad_isolated = 2;
  for (const SplittingMap& s : enumerate_splittings(path_graph(3), opt)) {
    CHECK(verify_splitting(s).ok);
    CHECK(s.source.degree(s.source.vertex_count()) == 0);
    CHECK(s.source.degree(s.source.vertex_count() - 1) == 0);
  }
}

TEST_CASE("sigma graphs") {
  // Stretching the path separates its two edges.
  SplittingMap p3 = sigma_graph(path_graph(3), 1);
  CHECK(p3.source == Graph(4, {{1, 3}, {2, 4}}));
  CHECK(p3.alpha == std::vector<int>{1, 2, 2, 3});
  CHECK(component_count(p3.source) == 2);

  // The standard 4-cycle at large t: two path components.
  SplittingMap c4 = sigma_graph(cycle_graph(4), 4);
  CHECK(c4.source == Graph(6, {{1, 4}, {1, 6}, {2, 5}, {3, 6}}));
  CHECK(component_count(c4.source) == 2);

  // The relabeled 4-cycle stays a 4-cycle.
  Graph c4b(4, {{2, 3}, {2, 4}, {1, 4}, {1, 3}});
  SplittingMap stable_cycle = sigma_graph(c4b, 4);
  CHECK(are_isomorphic(stable_cycle.source, cycle_graph(4)));

  // Small t can collide a lower endpoint with a shifted upper endpoint.
  Graph two_k2(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_WITH_AS(sigma_graph(two_k2, 1), doctest::Contains("collision"),
                       std::invalid_argument);
  // The raw stretched graph still exists and is a path.
  CHECK(are_isomorphic(sigma_stretched_graph(two_k2, 1), path_graph(3)));

  CHECK_THROWS_AS(sigma_graph(Graph(3, {{1, 2}}), 1), std::invalid_argument);  // isolated vertex
}

TEST_CASE("sigma stable graphs") {
  SigmaStable k2 = sigma_stable(path_graph(2));
  CHECK(k2.t0 == 1);
  CHECK(are_isomorphic(k2.splitting.source, path_graph(2)));

  SigmaStable p3 = sigma_stable(path_graph(3));
  CHECK(are_isomorphic(p3.splitting.source, Graph(4, {{1, 2}, {3, 4}})));
  CHECK(p3.t0 == 1);

  // Two disjoint edges collide at t = 1 (the stretch produces a path), so
  // stability only starts at t = 2.
  SigmaStable two_k2 = sigma_stable(Graph(4, {{1, 2}, {3, 4}}));
  CHECK(two_k2.t0 == 2);
  CHECK(are_isomorphic(two_k2.splitting.source, Graph(4, {{1, 2}, {3, 4}})));

  SigmaStable c4 = sigma_stable(cycle_graph(4));
  CHECK(component_count(c4.splitting.source) == 2);
  CHECK(c4.splitting.source == Graph(6, {{1, 4}, {1, 6}, {2, 5}, {3, 6}}));
  CHECK(c4.t0 == 2);  // t = 1 collides, t = 2 already matches the stable shape

  for (const SplittingMap& s :
       {k2.splitting, p3.splitting, c4.splitting, sigma_stable(star_graph(3)).splitting})
    CHECK(verify_splitting(s).ok);
}

TEST_CASE("stability certificate on random graphs") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = oracles::random_graph_no_isolated(rng, n, 40 + static_cast<int>(rng() % 40));
    Graph at_n = sigma_stretched_graph(g, n);
    for (int t = n; t <= n + 3; ++t)
      CHECK(are_isomorphic(sigma_stretched_graph(g, t), at_n, 64));
    SigmaStable st = sigma_stable(g);
    CHECK(are_isomorphic(st.splitting.source, at_n, 64));
    CHECK(verify_splitting(st.splitting).ok);
  }
}

TEST_CASE("gamma and C(G)") {
  CHECK(gamma(path_graph(3), Labeling::identity(3)) == 2);
  CHECK(gamma(path_graph(3), Labeling({1, 3, 2})) == 1);  // center carries the top label
  CHECK(gamma(path_graph(2), Labeling::identity(2)) == 1);

  CHECK(cg_set(path_graph(3)) == std::set<int>{1, 2});
  CHECK(cg_set(path_graph(4)) == std::set<int>{1, 2, 3});
  CHECK(cg_set(cycle_graph(4)).count(1) == 1);
  // Odd cycles also reach one component: around the 5-cycle the labels
  // 1,2,4,3,5 leave only one vertex that is neither a local minimum nor a
  // local maximum, so only one stretched adjacency breaks.
  CHECK(cg_set(cycle_graph(5)) == std::set<int>{1, 3});
  CHECK(cg_set(cycle_graph(3)) == std::set<int>{1});

  CgReport report = cg_report(path_graph(4));
  for (const auto& [value, labeling] : report.witnesses)
    CHECK(gamma(path_graph(4), labeling) == value);

  CHECK_THROWS_AS(cg_set(path_graph(9), 8), CapExceededError);
  CHECK_THROWS_AS(cg_set(Graph(3, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("comparison records") {
  // Identity splitting: everything ties.
  ComparisonRecord id = compare(identity_splitting(path_graph(4)), kGf2);
  CHECK(id.pd_ok());
  CHECK(id.reg_ok());
  CHECK(id.betti_ok());
  CHECK(id.dim_ok());
  CHECK(id.depth_ok());
  CHECK(id.delta_pd() == 0);
  CHECK(id.delta_depth() == 0);
  CHECK(id.delta_betti_min() == 0);

  // The double-star split of the spider drops depth from 3 to 2.
  Graph spider(9, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {7, 8}, {7, 9}});
  Graph stars(10, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {7, 8}, {7, 9}, {7, 10}});
  SplittingMap split{spider, stars, {1, 2, 3, 4, 5, 6, 7, 8, 9, 1}};
  REQUIRE(verify_splitting(split).ok);
  ComparisonRecord rec = compare(split, kGf2);
  CHECK(rec.target_report.depth == 3);
  CHECK(rec.source_report.depth == 2);
  CHECK(!rec.depth_ok());
  CHECK(rec.delta_depth() == -1);
  CHECK(rec.pd_ok());
  CHECK(rec.reg_ok());
  CHECK(rec.dim_ok());

  // The path-to-matching split swaps graded positions but keeps every
  // total inequality.
  ComparisonRecord swap =
      compare(SplittingMap{path_graph(3), Graph(4, {{1, 2}, {3, 4}}), {1, 2, 2, 3}}, kGf2);
  CHECK(swap.pd_ok());
  CHECK(swap.reg_ok());
  CHECK(swap.betti_ok());
  CHECK(swap.dim_ok());
  CHECK(swap.depth_ok());
}

TEST_CASE("depth inequality holds for paths and small even cycles") {
  std::vector<Graph> targets;
  for (int n = 2; n <= 7; ++n) targets.push_back(path_graph(n));
  targets.push_back(cycle_graph(4));
  targets.push_back(cycle_graph(6));
  for (const Graph& g : targets) {
    for (const SplittingMap& s : enumerate_splittings(g)) {
      ComparisonRecord rec = compare(s, kGf2);
      CAPTURE(write_edge_list(s.source));
      CHECK(rec.depth_ok());
    }
  }
}
