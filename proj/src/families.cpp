#include "splitgraph/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace splitgraph {

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star graph needs a nonnegative leaf count");
  std::vector<Edge> edges;
  for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int off = a.vertex_count();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + off, e.v + off);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

namespace {

// All edge slots of K_n in lexicographic order.
std::vector<Edge> edge_slots(int n) {
  std::vector<Edge> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  return slots;
}

// Next subset of fixed popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t c = x & (~x + 1);
  std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

std::vector<Graph> connected_graphs_with_edges(int m) {
  if (m < 0) throw std::invalid_argument("edge count must be nonnegative");
  std::vector<Graph> out;
  if (m == 0) return out;  // no connected graph on >= 2 vertices has 0 edges
  std::set<CanonicalForm> seen;
  for (int n = 2; n <= m + 1; ++n) {
    if (m < n - 1) continue;  // connectivity needs at least n-1 edges
    const std::vector<Edge> slots = edge_slots(n);
    const int total = static_cast<int>(slots.size());
    if (m > total) continue;
    std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    const std::uint64_t end = total == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total);
    while (mask < end) {
      std::vector<Edge> edges;
      edges.reserve(static_cast<std::size_t>(m));
      std::uint64_t rest = mask;
      while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        edges.push_back(slots[static_cast<std::size_t>(i)]);
      }
      Graph g(n, std::move(edges));
      if (is_connected(g) && seen.insert(canonical_form(g)).second) out.push_back(g);
      std::uint64_t next = next_combination(mask);
      if (next <= mask) break;
      mask = next;
    }
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to_edges(int max_m) {
  std::vector<Graph> out;
  for (int m = 1; m <= max_m; ++m) {
    std::vector<Graph> layer = connected_graphs_with_edges(m);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (n > 10) throw std::invalid_argument("exhaustive generation is intended for n <= 10");
  std::vector<Graph> cur{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<CanonicalForm> seen;
    std::vector<Graph> next;
    for (const Graph& g : cur) {
      const std::uint64_t limit = std::uint64_t{1} << (k - 1);
      for (std::uint64_t nb = 0; nb < limit; ++nb) {
        std::vector<Edge> edges = g.edges();
        std::uint64_t rest = nb;
        while (rest) {
          int v = std::countr_zero(rest) + 1;
          rest &= rest - 1;
          edges.emplace_back(v, k);
        }
        Graph h(k, std::move(edges));
        if (seen.insert(canonical_form(h)).second) next.push_back(h);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Graph> all_graphs_up_to_iso_max(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Graph> layer = all_graphs_up_to_iso(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace splitgraph
