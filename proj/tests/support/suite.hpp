#pragma once

// Small complexes shared by the unit and acceptance suites.

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "uberhom/complex.hpp"

namespace suite {

using uberhom::SimplicialComplex;

struct Named {
  std::string name;
  SimplicialComplex complex;
};

/// Triangles {1,2},{1,3},{2,3} plus the triangle {0,1,4}: a circle with a
/// 2-simplex hanging off vertex 1.
inline SimplicialComplex hanging_triangle() {
  return SimplicialComplex::from_facets(5, {{1, 2}, {1, 3}, {2, 3}, {0, 1, 4}});
}

/// A circle 0-1-4 joined at vertex 1 to two triangles 1-2-5 and 2-3-5.
inline SimplicialComplex two_stage_example() {
  return SimplicialComplex::from_facets(6, {{0, 1}, {1, 4}, {0, 4}, {1, 2, 5}, {2, 3, 5}});
}

/// Every bundled complex has at most 6 vertices.
inline std::vector<Named> bundled() {
  using namespace uberhom;
  return {
      {"simplex1", simplex_complex(1)},
      {"simplex2", simplex_complex(2)},
      {"simplex3", simplex_complex(3)},
      {"simplex4", simplex_complex(4)},
      {"boundary2", simplex_boundary(2)},
      {"boundary3", simplex_boundary(3)},
      {"boundary4", simplex_boundary(4)},
      {"loop4", loop_complex(4)},
      {"loop5", loop_complex(5)},
      {"loop6", loop_complex(6)},
      {"path3", path_complex(3)},
      {"complete4", complete_graph_complex(4)},
      {"bipartite23", complete_bipartite_complex(2, 3)},
      {"grid23", grid_complex(2, 3)},
      {"rp2_min", rp2_min()},
      {"bowtie", SimplicialComplex::from_facets(5, {{0, 1, 2}, {2, 3, 4}})},
      {"triangle_tail", SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}})},
      {"cone_loop4", cone(loop_complex(4))},
      {"octahedron", suspension(loop_complex(4))},
      {"hanging_triangle", hanging_triangle()},
      {"two_stage", two_stage_example()},
  };
}

/// Face closure of a few random facets on m vertices, every vertex present.
inline SimplicialComplex random_complex(std::size_t m, std::size_t facets, std::mt19937_64& rng) {
  std::vector<uberhom::Simplex> gens;
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << m) - 1);
  for (std::size_t f = 0; f < facets; ++f) {
    uberhom::Simplex s = pick(rng);
    while (std::popcount(s) > 3) s &= s - 1;
    gens.push_back(s);
  }
  return SimplicialComplex::from_facet_masks(m, gens);
}

}  // namespace suite
