#ifndef SPLITGRAPH_BETTI_HPP
#define SPLITGRAPH_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "splitgraph/field.hpp"
#include "splitgraph/graph.hpp"
#include "splitgraph/monomial.hpp"
#include "splitgraph/simplicial.hpp"

namespace splitgraph {

enum class TableConvention { of_ideal, of_quotient };

// Graded Betti numbers beta_{i,j}: homological degree i, total internal
// degree j. Stored sparsely; the convention records whether the table
// resolves the ideal I or the quotient S/I.
class BettiTable {
 public:
  BettiTable(TableConvention conv, FieldSpec field) : convention_(conv), field_(field) {}

  TableConvention convention() const { return convention_; }
  const FieldSpec& field() const { return field_; }
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  void add(int i, int j, long long value);
  long long entry(int i, int j) const;
  bool empty() const { return entries_.empty(); }

  // Largest i with a nonzero entry; -1 for an empty table.
  int pd() const;
  // Largest j - i over nonzero entries; smallest j for i = 0 is the initial
  // degree. -1 for an empty table.
  int reg() const;
  // Row sums beta_i = sum_j beta_{i,j}, indexed 0..pd(); empty for an
  // empty table.
  std::vector<long long> totals() const;

  BettiTable as_ideal() const;
  BettiTable as_quotient() const;

  // Rows i, columns j.
  std::string render_total_degree() const;
  // Rows j - i, columns i (the layout common in the literature).
  std::string render_diagram() const;

 private:
  TableConvention convention_;
  FieldSpec field_;
  std::map<std::pair<int, int>, long long> entries_;
};

namespace detail {
// Reduced homology dimensions of the complex whose faces are exactly
// `faces` (must be closed under subsets and contain the empty face);
// result[k+1] = dim of reduced homology in degree k, k = -1..top.
std::vector<long long> homology_dims_of_faces(const std::vector<std::uint64_t>& faces,
                                              const FieldSpec& field);
}  // namespace detail

// result[k+1] = dim of reduced homology in degree k for k = -1..dim;
// empty vector for the void complex.
std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const FieldSpec& field);

// Graded Betti numbers of S/I for a squarefree monomial ideal, via sums of
// reduced homology dimensions of induced subcomplexes of the Stanley-Reisner
// complex over all vertex subsets.
BettiTable graded_betti_hochster(const MonomialIdeal& ideal, const FieldSpec& field);

// Independent route, valid for arbitrary monomial ideals: per relevant
// multidegree, the Betti number of the ideal is a reduced homology dimension
// of the upper Koszul subset complex. Returned in quotient convention so the
// two routes compare directly.
BettiTable graded_betti_koszul(const MonomialIdeal& ideal, const FieldSpec& field);

// Snapshot of the homological invariants of an edge ideal. For the zero
// ideal (edgeless graph) pd_ideal and reg_ideal are reported as 0.
struct InvariantReport {
  int n = 0;
  FieldSpec field = FieldSpec::gf(2);
  int pd_quotient = 0;
  int pd_ideal = 0;
  int reg_ideal = 0;
  int reg_quotient = 0;
  int depth = 0;
  int dim = 0;
  int bight = 0;
  int nu = 0;
};

InvariantReport invariants_from_table(const Graph& g, const BettiTable& quotient_table);
InvariantReport invariants(const Graph& g, const FieldSpec& field, int betti_cap = 16);
std::string render(const InvariantReport& r);

}  // namespace splitgraph

#endif
