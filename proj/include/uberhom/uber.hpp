#pragma once

// The cube of colourings and its überhomology. Level j of the cube is the
// direct sum of the horizontal homologies of all colourings with j black
// vertices; the differential turns one white vertex black at a time.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "uberhom/coloured.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/f2.hpp"

namespace uberhom {

/// (cube degree j, dimension i, weight k).
using TriGrading = std::tuple<int, int, int>;
/// Nonzero ranks only.
using TriGradedRanks = std::map<TriGrading, std::size_t>;

std::size_t rank_at(const TriGradedRanks& ranks, int j, int i, int k);
/// The bigraded ranks of one cube degree.
BigradedRanks uber_level(const TriGradedRanks& ranks, int j);

inline constexpr std::size_t kDefaultCubeCap = 20;
/// UBERHOM_CAP if set, otherwise kDefaultCubeCap.
std::size_t cube_cap_from_env();

struct UberOptions {
  /// Largest vertex count accepted.
  std::size_t cap = cube_cap_from_env();
  /// Worker threads; 0 uses the hardware concurrency.
  std::size_t jobs = 1;
  /// Restrict to these (i, k); empty means all.
  std::vector<Bigrading> bigradings;
  /// Cube degrees to report; last_level < 0 means m.
  int first_level = 0;
  int last_level = -1;
  /// Check that consecutive differentials compose to zero.
  bool verify_square_zero = false;
};

/// Drops every simplex containing v.
std::vector<Simplex> d_eta_chain(std::span<const Simplex> chain, std::size_t v);

/// Matrix of d_eta from H^h(x, source) to H^h(x, target) at bigrading g,
/// where target is source with the white vertex v made black. Row r holds the
/// target class coordinates of the image of representative r.
BitMatrix d_eta_matrix(const ColouredComplex& source, const HomologyWithBasis& source_homology,
                       const ColouredComplex& target, const HomologyWithBasis& target_homology, Bigrading g,
                       std::size_t v);

/// One level of the cube, for a fixed list of bigradings.
struct ColourCubeLevel {
  int j = 0;
  std::vector<Colouring> colourings;
  std::vector<Bigrading> bigradings;
  /// [colouring][bigrading]
  std::vector<std::vector<HomologyWithBasis>> homology;
  /// [bigrading][colouring]: first index of that summand; a final entry holds
  /// the total rank.
  std::vector<std::vector<std::size_t>> offsets;

  std::size_t total(std::size_t g) const { return offsets[g].back(); }
};

/// Every (i, k) with 0 <= i <= dim x and 0 <= k <= i + 1.
std::vector<Bigrading> all_bigradings(const SimplicialComplex& x);

ColourCubeLevel build_cube_level(const SimplicialComplex& x, int j, std::span<const Bigrading> bigradings,
                                 std::size_t jobs = 1);
/// d^j from `from` (level j) to `to` (level j + 1), one matrix per bigrading.
std::vector<BitMatrix> cube_differential(const SimplicialComplex& x, const ColourCubeLevel& from,
                                         const ColourCubeLevel& to, std::size_t jobs = 1);

TriGradedRanks uber_homology(const SimplicialComplex& x, const UberOptions& options = {});

/// Simplices s with s + v a simplex for every vertex v: the intersection of
/// all closed stars.
std::vector<Simplex> star_intersection(const SimplicialComplex& x);
/// Degree zero read off star_intersection: one generator per simplex s at
/// (dim s, dim s + 1).
BigradedRanks uber_degree0_fast(const SimplicialComplex& x);

/// Every link of a nonempty simplex has the reduced homology of a sphere of
/// dimension dim x - dim s - 1.
bool is_homology_manifold(const SimplicialComplex& x);

struct TopDegreeReport {
  int n = -1;
  std::size_t m = 0;
  BigradedRanks top;
  bool top_ok = false;

  /// Horizontal homology of the colouring with only `vertex` white, split by
  /// weight, against the link and the star complement.
  struct VertexCase {
    std::size_t vertex = 0;
    BigradedRanks weight1;
    BigradedRanks link_expected;
    BigradedRanks weight0;
    BigradedRanks complement_expected;
  };
  std::vector<VertexCase> vertices;
  bool links_ok = false;
  bool complements_ok = false;

  bool ok() const noexcept { return top_ok && links_ok && complements_ok; }
};

/// Throws invalid_argument unless x is a closed homology manifold.
TopDegreeReport uber_topdegree_check(const SimplicialComplex& x, const UberOptions& options = {});

struct ConeSuspensionReport {
  BigradedRanks cone_top;
  BigradedRanks cone_degree0;
  BigradedRanks cone_degree0_expected;
  BigradedRanks suspension_degree0;
  BigradedRanks degree0;
  /// Present when x is a closed homology manifold.
  std::optional<BigradedRanks> suspension_top;
  std::optional<BigradedRanks> suspension_top_expected;

  bool cone_top_ok() const { return cone_top.empty(); }
  bool cone_degree0_ok() const { return cone_degree0 == cone_degree0_expected; }
  bool suspension_degree0_ok() const { return suspension_degree0 == degree0; }
  bool suspension_top_ok() const { return !suspension_top || suspension_top == suspension_top_expected; }
  bool ok() const { return cone_top_ok() && cone_degree0_ok() && suspension_degree0_ok() && suspension_top_ok(); }
};

ConeSuspensionReport cone_suspension_checks(const SimplicialComplex& x, const UberOptions& options = {});

}  // namespace uberhom
