#ifndef SPLITGRAPH_SIMPLICIAL_HPP
#define SPLITGRAPH_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "splitgraph/graph.hpp"

namespace splitgraph {

// A simplicial complex on ground set 1..n, stored by its facets (inclusion-
// maximal faces) as vertex masks. An empty facet list is the void complex
// (no faces at all); the single facet 0 is the complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  static SimplicialComplex from_facets(int n, std::vector<std::uint64_t> facets);
  static SimplicialComplex full_simplex(int n);
  static SimplicialComplex empty_complex(int n);  // just {∅}

  int vertex_count() const { return n_; }
  const std::vector<std::uint64_t>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_simplex() const { return facets_.size() <= 1; }
  // -1 for {∅}; meaningless (-2) for the void complex.
  int dim() const;
  bool has_face(std::uint64_t f) const;
  std::uint64_t support() const;
  // All faces, sorted ascending as masks; includes 0 when nonvoid.
  std::vector<std::uint64_t> all_faces() const;

  SimplicialComplex induced(std::uint64_t w) const;
  SimplicialComplex link(int v) const;
  SimplicialComplex deletion(int v) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> facets_;
};

// Faces are exactly the independent vertex sets of g.
SimplicialComplex independence_complex(const Graph& g);

// Recursive test on facets: a complex is vertex decomposable when it is a
// simplex or some shedding vertex has vertex-decomposable deletion and link.
bool is_vertex_decomposable(const SimplicialComplex& c);

}  // namespace splitgraph

#endif
