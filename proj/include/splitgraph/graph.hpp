#ifndef SPLITGRAPH_GRAPH_HPP
#define SPLITGRAPH_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace splitgraph {

// Unordered edge {u,v} with 1-based vertex labels, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const Edge&) const = default;
};

// A finite simple graph on vertices 1..n. Isolated vertices count toward n;
// they matter because the ambient polynomial ring has one variable per vertex.
// Hard limit n <= 64 (vertex sets are handled as 64-bit masks).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  // Bit w-1 is set iff {v,w} is an edge.
  std::uint64_t neighbor_mask(int v) const;
  std::uint64_t closed_neighbor_mask(int v) const;
  std::vector<int> neighbors(int v) const;  // sorted
  bool has_isolated_vertex() const;
  std::uint64_t full_mask() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted, duplicate-free
  std::vector<std::uint64_t> adj_;     // adj_[v-1]
};

inline std::uint64_t vertex_bit(int v) { return std::uint64_t{1} << (v - 1); }

// A relabeling of 1..n: perm[v-1] is the new label of vertex v.
struct Labeling {
  std::vector<int> perm;
  Labeling() = default;
  explicit Labeling(std::vector<int> p);
  static Labeling identity(int n);
  int apply(int v) const { return perm[v - 1]; }
  int size() const { return static_cast<int>(perm.size()); }
};

Graph relabel(const Graph& g, const Labeling& l);

// Graph-class recognizers grouped into one report. vertex_decomposable is
// empty when the size guard refused to compute it.
struct ClassFlags {
  bool bipartite = false;
  bool forest = false;
  bool chordal = false;
  bool weakly_chordal = false;
  bool c5_free = false;
  std::optional<bool> vertex_decomposable;
  bool unmixed = false;
  bool very_well_covered = false;
};

// Text edge-list format: first line "n m", then m lines "u v".
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
Graph complement(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_forest(const Graph& g);
bool is_chordal(const Graph& g);
// No induced cycle of length >= min_len.
bool has_induced_long_cycle(const Graph& g, int min_len);
bool is_weakly_chordal(const Graph& g);
bool is_c5_free(const Graph& g);
bool is_unmixed(const Graph& g);
bool is_very_well_covered(const Graph& g);

ClassFlags classify(const Graph& g, int vertex_decomposable_cap = 12);

// Exact NP-hard invariants, exhaustive at desk scale.
int min_vertex_cover(const Graph& g);
int independence_number(const Graph& g);
std::vector<std::uint64_t> maximal_independent_sets(const Graph& g);
std::vector<std::uint64_t> minimal_vertex_covers(const Graph& g);
// Maximum cardinality of an inclusion-minimal vertex cover.
int bight(const Graph& g);
// Largest set of edges pairwise disjoint and not joined by any edge.
int induced_matching_number(const Graph& g);

// Canonical form of a (optionally vertex-colored) graph: the colors of the
// canonically ordered vertices plus the packed upper-triangle adjacency bits.
// Equal forms certify isomorphism (color-preserving when colors are given).
struct CanonicalForm {
  int n = 0;
  std::vector<int> colors;
  std::vector<std::uint64_t> bits;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors = {});
bool are_isomorphic(const Graph& a, const Graph& b, int size_cap = 16);

}  // namespace splitgraph

#endif
