#pragma once

// Vertex colourings, the weight filtration and the horizontal, diagonal and
// filtered homologies of a coloured complex.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uberhom/complex.hpp"
#include "uberhom/f2.hpp"

namespace uberhom {

/// Black (1) and white (0) vertices. "100" colours vertex 0 black.
class Colouring {
 public:
  Colouring() = default;
  Colouring(std::size_t length, std::uint64_t black_mask);

  static Colouring parse(std::string_view bits);
  static Colouring all_black(std::size_t length);
  static Colouring all_white(std::size_t length);
  /// Only vertex i is black.
  static Colouring elementary(std::size_t length, std::size_t i);

  std::size_t length() const noexcept { return length_; }
  std::uint64_t black_mask() const noexcept { return black_; }
  std::uint64_t white_mask() const noexcept;
  bool is_black(std::size_t v) const noexcept { return (black_ >> v) & 1u; }
  /// Number of black vertices.
  std::size_t norm() const noexcept;
  Colouring complement() const;
  std::string to_string() const;

  bool operator==(const Colouring&) const = default;
  auto operator<=>(const Colouring&) const = default;

 private:
  std::size_t length_ = 0;
  std::uint64_t black_ = 0;
};

/// Number of white vertices of s.
int weight(Simplex s, const Colouring& colouring);

/// (dimension i, weight k).
using Bigrading = std::pair<int, int>;
/// Nonzero ranks only.
using BigradedRanks = std::map<Bigrading, std::size_t>;

std::size_t rank_at(const BigradedRanks& ranks, int i, int k);

/// The chain groups C(X, e) split by bigrading, with the horizontal part of
/// the boundary (dropping a black vertex) and the diagonal part (dropping a
/// white vertex). Blocks list simplices by increasing mask. The complex is
/// referenced, not copied.
class ColouredComplex {
 public:
  ColouredComplex(const SimplicialComplex& x, const Colouring& colouring);
  ColouredComplex(SimplicialComplex&&, const Colouring&) = delete;

  const SimplicialComplex& complex() const noexcept { return *complex_; }
  const Colouring& colouring() const noexcept { return colouring_; }
  int dim() const noexcept { return complex_->dim(); }

  std::span<const Simplex> block(int i, int k) const noexcept;
  /// Position of s inside its block.
  std::size_t position(Simplex s) const noexcept;

  /// (i, k) -> (i-1, k).
  BitMatrix horizontal(int i, int k) const;
  /// (i, k) -> (i-1, k-1).
  BitMatrix diagonal(int i, int k) const;

  /// Homology of the horizontal complex at (i, k).
  HomologyWithBasis horizontal_homology_at(int i, int k) const;
  std::size_t horizontal_rank_at(int i, int k) const;
  std::size_t diagonal_rank_at(int i, int k) const;

 private:
  const SimplicialComplex* complex_;
  Colouring colouring_;
  std::vector<std::vector<std::vector<Simplex>>> blocks_;  // [i][k]
  std::vector<std::vector<std::size_t>> position_;         // [i][index_of]
};

void check_lengths(const SimplicialComplex& x, const Colouring& colouring);

BigradedRanks horizontal_homology(const SimplicialComplex& x, const Colouring& colouring);
/// Representative cycles of every nonzero horizontal group.
std::map<Bigrading, std::vector<std::vector<Simplex>>> horizontal_generators(const SimplicialComplex& x,
                                                                             const Colouring& colouring);
/// Homology of the diagonal differential, computed directly.
BigradedRanks diagonal_homology(const SimplicialComplex& x, const Colouring& colouring);
/// The same groups read off the horizontal homology of the complementary
/// colouring, using H^d_i(e, k) = H^h_i(complement e, i + 1 - k).
BigradedRanks diagonal_homology_via_complement(const SimplicialComplex& x, const Colouring& colouring);

/// Ranks of H_i of the subcomplex of simplices with weight at most k under the
/// full boundary, for i = 0..dim. Negative k gives the empty complex.
std::vector<std::size_t> filtered_homology(const SimplicialComplex& x, const Colouring& colouring, int k);

/// Coefficients of sum (-1)^i rank H^h_i(k) t^k, indexed by k.
std::vector<std::int64_t> graded_euler(const SimplicialComplex& x, const Colouring& colouring);
std::int64_t evaluate(std::span<const std::int64_t> poly, std::int64_t t);

/// Sum over k at each i, indexed by i.
std::vector<std::size_t> flatten(const BigradedRanks& ranks);

/// The subcomplex spanned by black vertices.
SimplicialComplex black_subcomplex(const SimplicialComplex& x, const Colouring& colouring);

/// Every colouring of length m with exactly j black vertices, by increasing mask.
std::vector<Colouring> colourings_of_norm(std::size_t m, std::size_t j);

}  // namespace uberhom
