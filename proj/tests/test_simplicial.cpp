#include <doctest.h>

#include "splitgraph/families.hpp"
#include "splitgraph/simplicial.hpp"

using namespace splitgraph;

TEST_CASE("facet normalization and membership") {
  SimplicialComplex c = SimplicialComplex::from_facets(4, {0b0011, 0b0001, 0b1100});
  CHECK(c.facets() == std::vector<std::uint64_t>{0b0011, 0b1100});
  CHECK(c.has_face(0));
  CHECK(c.has_face(0b0010));
  CHECK(!c.has_face(0b0110));
  CHECK(c.dim() == 1);

  CHECK(SimplicialComplex().is_void());
  CHECK(SimplicialComplex::empty_complex(3).dim() == -1);
  CHECK(SimplicialComplex::full_simplex(3).dim() == 2);
}

TEST_CASE("link and deletion") {
  // Two triangles glued along vertex 3, on ground set 1..6.
  SimplicialComplex c = SimplicialComplex::from_facets(6, {0b00111, 0b11100});
  SimplicialComplex lk = c.link(3);
  CHECK(lk.facets() == std::vector<std::uint64_t>{0b00011, 0b11000});
  SimplicialComplex del = c.deletion(3);
  CHECK(del.facets() == std::vector<std::uint64_t>{0b00011, 0b11000});
  // A ground-set vertex outside every facet: deletion is a no-op, link void.
  CHECK(c.deletion(6).facets() == c.facets());
  CHECK(c.link(6).is_void());
}

TEST_CASE("vertex decomposability of small complexes") {
  CHECK(is_vertex_decomposable(SimplicialComplex()));
  CHECK(is_vertex_decomposable(SimplicialComplex::empty_complex(2)));
  CHECK(is_vertex_decomposable(SimplicialComplex::full_simplex(4)));
  // Two isolated points: shed either one.
  CHECK(is_vertex_decomposable(SimplicialComplex::from_facets(2, {0b01, 0b10})));
  // The boundary of a simplex is vertex decomposable.
  CHECK(is_vertex_decomposable(SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110})));
  // Independence complexes: paths and the 3- and 5-cycles are vertex
  // decomposable; the 4- and 6-cycles are not.
  CHECK(is_vertex_decomposable(independence_complex(path_graph(4))));
  CHECK(is_vertex_decomposable(independence_complex(path_graph(6))));
  CHECK(!is_vertex_decomposable(independence_complex(cycle_graph(4))));
  CHECK(is_vertex_decomposable(independence_complex(cycle_graph(5))));
  CHECK(!is_vertex_decomposable(independence_complex(cycle_graph(6))));
  CHECK(is_vertex_decomposable(independence_complex(cycle_graph(3))));
  CHECK(is_vertex_decomposable(independence_complex(star_graph(4))));
}
