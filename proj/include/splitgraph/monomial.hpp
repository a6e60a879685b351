#ifndef SPLITGRAPH_MONOMIAL_HPP
#define SPLITGRAPH_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "splitgraph/graph.hpp"
#include "splitgraph/simplicial.hpp"

namespace splitgraph {

// A monomial in variables x1, x2, ... stored as (index, exponent) pairs with
// 1-based indices, sorted by index, exponents >= 1. The default-constructed
// monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial from_pairs(std::vector<std::pair<int, int>> index_exponent);
  static Monomial variable(int index);
  static Monomial from_support(std::uint64_t mask);  // squarefree
  // Text form "x1^2*x4^3*x7": caret omitted for exponent 1, factors sorted.
  static Monomial parse(const std::string& text);
  std::string str() const;

  const std::vector<std::pair<int, int>>& terms() const { return terms_; }
  int degree() const;
  bool is_unit() const { return terms_.empty(); }
  bool is_squarefree() const;
  int max_index() const;  // 0 for the unit
  int exponent(int index) const;
  bool divides(const Monomial& other) const;
  std::uint64_t support_mask() const;  // requires max_index() <= 64
  // Divides out one copy of each variable in `mask`; every such variable
  // must actually occur.
  Monomial erase_one_of_each(std::uint64_t mask) const;
  // The variable indices with multiplicity, ascending: i_1 <= ... <= i_d.
  std::vector<int> expanded_indices() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<int, int>> terms_;
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);

// The stretching operator: sigma^t sends x_{i_1}...x_{i_d} (indices sorted,
// with multiplicity) to x_{i_1} x_{i_2+t} x_{i_3+2t} ... x_{i_d+t(d-1)}.
Monomial stretch(const Monomial& u, int t);

// A monomial ideal given by its unique minimal generating set in a ring
// with ambient_n variables. The default-constructed value is the zero ideal
// in zero variables. Unit generators are rejected.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int ambient_n, std::vector<Monomial> gens);

  int ambient_n() const { return ambient_n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int ambient_n_ = 0;
  std::vector<Monomial> gens_;
};

// Removes every monomial strictly divisible by another in the set.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

MonomialIdeal edge_ideal(const Graph& g);

// Generator-wise sigma^t with the ambient ring cut down to the smallest r
// containing every stretched index. The zero ideal maps to itself.
MonomialIdeal stretch_ideal(const MonomialIdeal& ideal, int t);

// I(G) : (x - y) for nonadjacent x, y with disjoint closed neighborhoods;
// equals I(G) + (z*w : z in N(x), w in N(y)).
MonomialIdeal colon_by_linear_difference(const Graph& g, int x, int y);

// Stanley-Reisner complex of a squarefree ideal: faces are the subsets
// containing no generator support.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

}  // namespace splitgraph

#endif
