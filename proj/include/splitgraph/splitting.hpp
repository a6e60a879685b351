#ifndef SPLITGRAPH_SPLITTING_HPP
#define SPLITGRAPH_SPLITTING_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "splitgraph/betti.hpp"
#include "splitgraph/field.hpp"
#include "splitgraph/graph.hpp"

namespace splitgraph {

// A candidate splitting: source G', target G and the vertex map alpha with
// alpha[v-1] the target of source vertex v. A valid splitting has alpha
// surjective, edges mapping to edges, and the induced edge map bijective.
struct SplittingMap {
  Graph target;
  Graph source;
  std::vector<int> alpha;
};

struct SplitCheck {
  bool ok = true;
  std::string reason;  // first violated requirement, with a witness
};

SplitCheck verify_splitting(const SplittingMap& s);

// Condition (1): vertices in one fiber have pairwise fully adjacent
// neighborhoods. Condition (2): vertices in one fiber lie in pairwise
// distinct connected components of the source.
struct Specialness {
  bool condition1 = false;
  bool condition2 = false;
  bool special() const { return condition1 || condition2; }
};

Specialness specialness(const SplittingMap& s);

struct SplitEnumOptions {
  enum class Filter { all, special1, special2 };
  Filter filter = Filter::all;
  bool dedupe_isomorphic = false;   // up to isomorphism commuting with alpha
  int max_source_vertices = 0;      // 0 = unbounded
  int pad_isolated = 0;             // extra isolated source vertices, mapped to vertex 1
  long long max_total = 1'000'000;  // guard on the raw partition-product count
};

// Enumerates one splitting per choice, at every target vertex, of a set
// partition of the incident edge-ends; blocks become source vertices.
// Deterministic order. The visitor returns false to stop early.
void for_each_splitting(const Graph& g, const SplitEnumOptions& opt,
                        const std::function<bool(const SplittingMap&, const Specialness&)>& visit);
std::vector<SplittingMap> enumerate_splittings(const Graph& g, const SplitEnumOptions& opt = {});

// Number of raw splittings (the product of Bell numbers of the degrees).
long long splitting_count(const Graph& g);

// The graph defined by stretching every edge {i,j} (i<j) to {i, j+t}, with
// the surviving labels renumbered contiguously. Defined for every t >= 1.
Graph sigma_stretched_graph(const Graph& g, int t);

// The stretched graph together with its canonical splitting map onto g.
// Requires g without isolated vertices; throws when a label collision
// (a lower endpoint equal to a shifted upper endpoint) makes the canonical
// map ill-defined, which can happen for small t.
SplittingMap sigma_graph(const Graph& g, int t);

struct SigmaStable {
  SplittingMap splitting;
  int t0 = 1;  // least t from which the stretched graph is stable up to isomorphism
};

// Stability is certified at t = n: from there on, two stretched edges are
// adjacent iff they share a lower or an upper endpoint, so the relabeled
// graph no longer changes. t0 is found by scanning downward from n.
SigmaStable sigma_stable(const Graph& g);

// Component count of the stable stretched graph of g relabeled by l.
int gamma(const Graph& g, const Labeling& l);

// The set of component counts achievable over all n! labelings, with one
// witness labeling per achieved value.
struct CgReport {
  std::set<int> values;
  std::map<int, Labeling> witnesses;
};
CgReport cg_report(const Graph& g, int factorial_cap = 8);
std::set<int> cg_set(const Graph& g, int factorial_cap = 8);

// Invariant comparison between a graph and one of its splitting graphs.
// Verdicts are always recomputed from the stored reports.
struct ComparisonRecord {
  InvariantReport target_report;  // G
  InvariantReport source_report;  // G'
  std::vector<long long> betti_totals_target;  // beta_i of I(G)
  std::vector<long long> betti_totals_source;  // beta_i of I(G')

  bool pd_ok() const { return target_report.pd_ideal <= source_report.pd_ideal; }
  bool reg_ok() const { return target_report.reg_ideal <= source_report.reg_ideal; }
  bool betti_ok() const;
  bool dim_ok() const { return source_report.dim >= target_report.dim; }
  bool depth_ok() const { return source_report.depth >= target_report.depth; }

  int delta_pd() const { return source_report.pd_ideal - target_report.pd_ideal; }
  int delta_reg() const { return source_report.reg_ideal - target_report.reg_ideal; }
  int delta_dim() const { return source_report.dim - target_report.dim; }
  int delta_depth() const { return source_report.depth - target_report.depth; }
  int delta_bight() const { return source_report.bight - target_report.bight; }
  int delta_nu() const { return source_report.nu - target_report.nu; }
  long long delta_betti_min() const;
};

ComparisonRecord compare(const SplittingMap& s, const FieldSpec& field, int betti_cap = 16);

}  // namespace splitgraph

#endif
