#pragma once

// Finite simplicial complexes over a vertex universe of at most 64 vertices.
// A simplex is the bit mask of its vertex set.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uberhom/f2.hpp"

namespace uberhom {

using Simplex = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline int simplex_dim(Simplex s) noexcept { return std::popcount(s) - 1; }
inline bool simplex_contains(Simplex s, std::size_t v) noexcept { return (s >> v) & 1u; }
Simplex make_simplex(std::initializer_list<std::size_t> vertices);
Simplex make_simplex(std::span<const std::size_t> vertices);
std::vector<std::size_t> simplex_vertices(Simplex s);
/// "<0,2,5>"
std::string simplex_to_string(Simplex s);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of the facets with every vertex of [0, m) present.
  static SimplicialComplex from_facets(std::size_t m, const std::vector<std::vector<std::size_t>>& facets);
  static SimplicialComplex from_facet_masks(std::size_t m, std::span<const Simplex> facets);
  /// Face closure of `generators` inside a universe of m vertices. Vertices
  /// outside every generator are absent, and the result may be void.
  static SimplicialComplex subcomplex(std::size_t m, std::span<const Simplex> generators);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  bool is_void() const noexcept { return size_ == 0; }
  /// -1 for the void complex.
  int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size() const noexcept { return size_; }

  /// Simplices of dimension d in increasing mask order.
  std::span<const Simplex> simplices(int d) const noexcept;
  /// All simplices ordered by (dimension, mask).
  std::vector<Simplex> simplices() const;
  std::vector<Simplex> facets() const;
  std::vector<std::size_t> f_vector() const;
  /// Mask of the vertices that appear as 0-simplices.
  Simplex vertex_mask() const noexcept { return vertex_mask_; }

  bool contains(Simplex s) const noexcept;
  /// Position of s inside simplices(dim s), or npos.
  std::size_t index_of(Simplex s) const noexcept;

  std::int64_t euler_characteristic() const noexcept;
  bool is_connected() const;
  /// 1-skeleton adjacency masks.
  std::vector<std::uint64_t> adjacency() const;

  /// Boundary map C_d -> C_{d-1} (one row per d-simplex). For d = 0 the map
  /// has no columns.
  BitMatrix boundary_matrix(int d) const;

  bool operator==(const SimplicialComplex& other) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::size_t size_ = 0;
  Simplex vertex_mask_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
};

// Local structure.
std::vector<Simplex> star(const SimplicialComplex& x, std::size_t v);
SimplicialComplex closed_star(const SimplicialComplex& x, std::size_t v);
/// May be void, for example the link of an isolated vertex.
SimplicialComplex link(const SimplicialComplex& x, std::size_t v);
/// Simplices avoiding v, with vertices above v shifted down by one.
SimplicialComplex delete_star(const SimplicialComplex& x, std::size_t v);
/// Vertex v is sent to perm[v].
SimplicialComplex relabel(const SimplicialComplex& x, std::span<const std::size_t> perm);

// Constructions.
/// Vertices are the simplices of x ordered by dimension, then by their sorted
/// vertex lists lexicographically. Requires at most 64 simplices.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& x);
/// The apex is vertex m.
SimplicialComplex cone(const SimplicialComplex& x);
/// The two suspension points are m and m + 1.
SimplicialComplex suspension(const SimplicialComplex& x);
std::size_t diameter(const SimplicialComplex& x);

// Homology over F2.
/// Ranks of H_d for d = 0..dim.
std::vector<std::size_t> homology_ranks(const SimplicialComplex& x);
/// Nonzero reduced ranks keyed by degree; the void complex has H_{-1} = F.
std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& x);

// Standard families.
SimplicialComplex simplex_complex(std::size_t n);
SimplicialComplex simplex_boundary(std::size_t n);
SimplicialComplex loop_complex(std::size_t m);
/// n edges on n + 1 vertices.
SimplicialComplex path_complex(std::size_t n);
SimplicialComplex grid_complex(std::size_t rows, std::size_t cols);
/// 1-skeleton of the n-cube.
SimplicialComplex cube_complex(std::size_t n);
SimplicialComplex complete_graph_complex(std::size_t m);
SimplicialComplex complete_bipartite_complex(std::size_t a, std::size_t b);
SimplicialComplex torus_min();
SimplicialComplex rp2_min();
SimplicialComplex icosahedron();
/// Dispatch by name: simplex, boundary, loop, path, grid, cube, complete,
/// bipartite, torus_min, rp2_min, icosahedron.
SimplicialComplex standard_complex(std::string_view name, std::span<const std::size_t> params = {});

// Facet-list text: first line m, then one facet per line; '#' comments.
SimplicialComplex parse_facet_text(std::string_view text);
std::string to_facet_text(const SimplicialComplex& x);

}  // namespace uberhom
