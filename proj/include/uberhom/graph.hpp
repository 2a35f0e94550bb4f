#pragma once

// Simple graphs as one-dimensional complexes: graph6 input, the Θ invariants
// and dissimilarity, the graph homologies built from the cube of colourings,
// and matching complexes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uberhom/coloured.hpp"
#include "uberhom/complex.hpp"

namespace uberhom {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected graph without loops or multiple edges on at most 64 vertices.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count);
  static SimpleGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;
  /// Pairs (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  bool has_edge(std::size_t u, std::size_t v) const noexcept;
  void add_edge(std::size_t u, std::size_t v);
  std::uint64_t neighbours(std::size_t v) const noexcept { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const noexcept;

  bool is_connected() const;
  /// Degrees in decreasing order.
  std::vector<std::size_t> degree_sequence() const;
  /// Length of a shortest cycle; nullopt for forests.
  std::optional<std::size_t> girth() const;
  std::size_t vertex_cover_number() const;
  bool is_vertex_cover(std::uint64_t vertices) const noexcept;
  /// Vertex v is sent to perm[v].
  SimpleGraph relabel(std::span<const std::size_t> perm) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<std::uint64_t> adjacency_;
};

SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);
/// One graph per nonblank line; an optional ">>graph6<<" header is skipped.
std::vector<SimpleGraph> parse_graph6_lines(std::string_view text);

/// Vertices and edges as a complex. Throws unless g is connected.
SimplicialComplex graph_as_complex(const SimpleGraph& g);

SimpleGraph complete_graph(std::size_t m);
SimpleGraph cycle_graph(std::size_t m);
/// n edges on n + 1 vertices.
SimpleGraph path_graph(std::size_t n);
SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b);
SimpleGraph grid_graph(std::size_t rows, std::size_t cols);
SimpleGraph cube_graph(std::size_t n);
/// Two triangles 0-1-2 and 3-4-5 joined by the edges i, i+3.
SimpleGraph prism_graph();
/// Dispatch by name: complete, cycle, path, bipartite, grid, cube, prism.
SimpleGraph standard_graph(std::string_view name, std::span<const std::size_t> params = {});

// ------------------------------------------------------------------- Θ

/// Horizontal homology of a coloured graph read off its black subgraph,
/// white vertices and mixed edges, without linear algebra.
BigradedRanks graph_horizontal_homology(const SimpleGraph& g, const Colouring& colouring);

struct ThetaTuple {
  int j = 0;
  int i = 0;
  int k = 0;
  std::size_t r = 0;

  bool operator==(const ThetaTuple&) const = default;
  auto operator<=>(const ThetaTuple&) const = default;
};

/// How tuples of different colourings at one level are combined.
enum class ThetaMode {
  /// One tuple per (j, i, k) with the ranks summed.
  aggregated,
  /// One tuple per colouring and nonzero bigrading.
  per_colouring,
};

struct ThetaLevel {
  int j = 0;
  /// Decreasing lexicographic order.
  std::vector<ThetaTuple> tuples;

  bool operator==(const ThetaLevel&) const = default;
};

/// Levels 0 and 1 use the closed form; higher levels reduce the horizontal
/// complex of every colouring.
ThetaLevel theta(const SimpleGraph& g, int j, ThetaMode mode = ThetaMode::aggregated, std::size_t jobs = 1);

/// A nonnegative rational, or the marker for graphs of different orders.
struct Dissimilarity {
  bool infinite = false;
  /// Θ agrees at every level 0..m.
  bool theta_equivalent = false;
  std::size_t numerator = 0;
  std::size_t denominator = 1;
  /// Least level where Θ differs; -1 when none does or when infinite.
  int first_level = -1;

  std::string to_string() const;
  bool operator==(const Dissimilarity&) const = default;
};

/// (m - j) / m in lowest terms.
Dissimilarity dissimilarity_at(std::size_t m, int first_level);
/// Compares per-colouring tuples by default; the aggregated sums can miss
/// differences that the per-colouring data sees.
Dissimilarity dissimilarity(const SimpleGraph& a, const SimpleGraph& b, ThetaMode mode = ThetaMode::per_colouring,
                            std::size_t jobs = 1);
/// Three-way comparison of finite values; infinite sorts last.
std::strong_ordering compare(const Dissimilarity& a, const Dissimilarity& b);
/// c <= a + b, with infinity absorbing.
bool bounded_by_sum(const Dissimilarity& c, const Dissimilarity& a, const Dissimilarity& b);

struct DeltaBounds {
  std::optional<Dissimilarity> degree_sequence;
  std::optional<Dissimilarity> girth;
  std::optional<Dissimilarity> vertex_cover;
};

/// The bounds that apply to two graphs with the same vertex count.
DeltaBounds delta_lower_bounds(const SimpleGraph& a, const SimpleGraph& b);

/// H^h(g, e, 2) vanishes exactly when the black vertices cover every edge,
/// checked over all colourings.
bool vertex_cover_bijection_check(const SimpleGraph& g);

struct SpaciousTreeReport {
  /// Colourings whose black subgraph is a tree, by increasing mask.
  std::vector<Colouring> colourings;
  /// Subtrees with at most one edge in every triangle, as edge lists (single
  /// vertices count as trees with no edges).
  std::vector<std::vector<Edge>> trees;
  /// Spacious trees not contained in a larger one.
  std::vector<std::vector<Edge>> maximal_trees;
  /// The vertex sets of the spacious trees are exactly the colourings above.
  bool bijective = false;
};

SpaciousTreeReport spacious_trees(const SimpleGraph& g);

// ------------------------------------------------------- graph homologies

/// Ranks by cube degree.
using GradedRanks = std::map<int, std::size_t>;

/// Homology of the cube whose level j is spanned by the components of the
/// black subgraphs with j black vertices, with maps induced by inclusion.
GradedRanks h0_graph(const SimpleGraph& g, std::size_t jobs = 1);
/// Überhomology of g at the bigradings (0,1), (1,1) and (1,2).
GradedRanks h1_0(const SimpleGraph& g, std::size_t jobs = 1);
GradedRanks h1_1(const SimpleGraph& g, std::size_t jobs = 1);
GradedRanks h2_graph(const SimpleGraph& g, std::size_t jobs = 1);

/// Complex on the edge list whose simplices are sets of pairwise disjoint
/// edges. Parallel edges are allowed and never disjoint.
SimplicialComplex matching_complex(std::span<const Edge> edges);
SimplicialComplex matching_complex(const SimpleGraph& g);

}  // namespace uberhom
