#pragma once

// Plane graphs given by rotation systems, their duals, overlaid Tait graphs
// and the horizontal homology of the Tait matching complex.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "uberhom/coloured.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/graph.hpp"

namespace uberhom {

/// Connected graph on the sphere. Loops and parallel edges are allowed so
/// that duals are always defined. Edge e = (u, v) has darts 2e (u to v) and
/// 2e + 1 (v to u); each vertex lists its outgoing darts counterclockwise.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  /// Throws invalid_argument unless the darts form a connected embedding with
  /// V - E + F = 2.
  PlaneGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::vector<std::size_t>> rotation);

  /// rotation[v] lists the neighbours of v counterclockwise. Simple graphs only.
  static PlaneGraph from_rotation(const std::vector<std::vector<std::size_t>>& rotation);
  /// Lines "v <id>: <neighbours>", neighbours separated by spaces or commas;
  /// '#' starts a comment.
  static PlaneGraph parse(std::string_view text);
  std::string to_text() const;

  std::size_t vertex_count() const noexcept { return rotation_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<std::size_t>>& rotation() const noexcept { return rotation_; }

  std::size_t tail(std::size_t dart) const noexcept;
  std::size_t head(std::size_t dart) const noexcept { return tail(dart ^ 1u); }
  /// The dart after `dart` along the boundary of its face.
  std::size_t next_in_face(std::size_t dart) const;
  /// Face to the left of each dart.
  std::size_t face_of(std::size_t dart) const { return face_of_[dart]; }
  /// Darts of each face in boundary order, numbered by smallest dart.
  const std::vector<std::vector<std::size_t>>& faces() const noexcept { return faces_; }

  bool is_simple() const;
  /// Throws invalid_argument unless simple.
  SimpleGraph graph() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> face_of_;
  std::vector<std::vector<std::size_t>> faces_;
};

/// Vertices are the faces of g; dual dart d leaves face_of(d), so the faces
/// of the dual are the vertices of g.
PlaneGraph dual_graph(const PlaneGraph& g);

PlaneGraph plane_cycle(std::size_t n);
/// n edges on n + 1 vertices.
PlaneGraph plane_path(std::size_t n);
/// Hub n joined to the cycle 0..n-1.
PlaneGraph plane_wheel(std::size_t n);

/// Overlay of g and its dual with a crossing vertex on every edge.
/// Vertices: those of g, then faces, then crossings (one per edge of g).
/// Edge e = (u, v) of g contributes, in order, (u, c), (v, c), (f, c) and
/// (f', c) where c is its crossing and f, f' the faces on either side; the
/// first two are black.
struct TaitGraph {
  std::size_t graph_vertices = 0;
  std::size_t faces = 0;
  std::size_t crossings = 0;
  std::vector<Edge> edges;
  std::vector<bool> black;

  std::size_t vertex_count() const noexcept { return graph_vertices + faces + crossings; }
};

TaitGraph tait_graph(const PlaneGraph& g);
/// Colouring of the matching complex of the Tait graph: its vertices are Tait
/// edges, black when the edge touches a vertex of g.
Colouring tait_colouring(const TaitGraph& t);
/// The black Tait edges: the barycentric subdivision of g.
std::vector<Edge> subdivision_edges(const TaitGraph& t);
/// The white Tait edges: the barycentric subdivision of the dual.
std::vector<Edge> dual_subdivision_edges(const TaitGraph& t);

struct TaitReport {
  /// Horizontal homology of the coloured Tait matching complex.
  BigradedRanks lhs;
  /// Sum over matchings m of the white edges of the reduced homology of the
  /// matching complex of the subdivision of g(m), shifted to (d + |m|, |m|);
  /// at |m| = 0 the unreduced homology. g(m) drops the edges whose crossings
  /// m covers.
  BigradedRanks rhs;
  /// Matchings of the white edges by size.
  std::vector<std::size_t> matchings_by_size;
  /// lhs at weight zero, by dimension.
  std::vector<std::size_t> level0;
  /// Homology of the matching complex of the subdivision of g.
  std::vector<std::size_t> subdivision_homology;
  /// Homology of the full filtration, against the Tait matching complex.
  std::vector<std::size_t> top_filtration;
  std::vector<std::size_t> tait_homology;

  bool decomposition_ok() const { return lhs == rhs; }
  bool level0_ok() const { return level0 == subdivision_homology; }
  bool top_ok() const { return top_filtration == tait_homology; }
  bool ok() const { return decomposition_ok() && level0_ok() && top_ok(); }
};

/// Throws resource_cap when the Tait graph has more than 64 edges.
TaitReport verify_tait_decomposition(const PlaneGraph& g);

}  // namespace uberhom
