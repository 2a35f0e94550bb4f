#pragma once

// Face-poset matchings induced by colourings: the subgraph I(X, e) of
// horizontal boundary components, dalmatian colourings and discrete Morse
// checks.

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "uberhom/coloured.hpp"
#include "uberhom/complex.hpp"

namespace uberhom {

/// A codimension-one face relation lower < upper.
struct PosetEdge {
  Simplex upper = 0;
  Simplex lower = 0;

  bool operator==(const PosetEdge&) const = default;
  auto operator<=>(const PosetEdge&) const = default;
};

struct MorseReport {
  bool is_matching = false;
  /// Only meaningful when is_matching holds.
  bool is_acyclic = false;
  /// Unmatched simplices ordered by (dimension, mask); empty unless is_matching.
  std::vector<Simplex> critical_cells;
  std::vector<PosetEdge> edges;

  bool is_morse() const noexcept { return is_matching && is_acyclic; }
  /// Number of critical cells in each dimension.
  std::vector<std::size_t> critical_counts() const;
};

/// Edges (s, s minus v) for every black vertex v of every simplex s of
/// dimension at least one.
std::vector<PosetEdge> induced_subgraph(const SimplicialComplex& x, const Colouring& colouring);

/// Nonzero colouring whose black vertices have pairwise disjoint closed stars.
bool is_dalmatian(const SimplicialComplex& x, const Colouring& colouring);

/// Checks that `edges` is a matching on the face poset of x and, if so, that
/// reversing it leaves no directed cycle.
MorseReport check_matching(const SimplicialComplex& x, std::span<const PosetEdge> edges);
MorseReport verify_morse(const SimplicialComplex& x, const Colouring& colouring);

/// Edges of I(X, e) grouped by the black vertex they remove.
std::map<std::size_t, std::vector<PosetEdge>> elementary_decomposition(const SimplicialComplex& x,
                                                                       const Colouring& colouring);

struct DalmatianHomology {
  BigradedRanks ranks;
  /// One generator per black vertex at (0,0) and one per simplex outside all
  /// black closed stars at (dim, dim+1).
  std::vector<std::pair<Bigrading, Simplex>> generators;
};

/// Horizontal homology of a dalmatian colouring without linear algebra.
DalmatianHomology dalmatian_closed_form(const SimplicialComplex& x, const Colouring& colouring);

/// Union of the matchings obtained by colouring the vertex sets in `stages`
/// black one after another, each time on the cells left unmatched. Each stage
/// must be dalmatian, must avoid the closed stars of earlier stages, and the
/// closed stars of all stages together must cover every vertex. A violation
/// throws and names the offending stage.
MorseReport iterated_dalmatian(const SimplicialComplex& x, std::span<const std::vector<std::size_t>> stages);

}  // namespace uberhom
