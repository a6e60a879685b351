#ifndef SPLITGRAPH_FAMILIES_HPP
#define SPLITGRAPH_FAMILIES_HPP

#include <vector>

#include "splitgraph/graph.hpp"

namespace splitgraph {

Graph path_graph(int n);        // P_n, edges {i, i+1}
Graph cycle_graph(int n);       // C_n, n >= 3
Graph star_graph(int leaves);   // K_{1,m}, center 1
Graph complete_graph(int n);    // K_n
Graph disjoint_union(const Graph& a, const Graph& b);  // b's labels shifted

// Connected graphs with exactly m edges (any vertex count), one
// representative per isomorphism class, deterministic order.
std::vector<Graph> connected_graphs_with_edges(int m);
std::vector<Graph> connected_graphs_up_to_edges(int max_m);

// All graphs on exactly n (resp. at most max_n) vertices up to isomorphism,
// generated by vertex augmentation. Intended for n <= 8.
std::vector<Graph> all_graphs_up_to_iso(int n);
std::vector<Graph> all_graphs_up_to_iso_max(int max_n);

}  // namespace splitgraph

#endif
