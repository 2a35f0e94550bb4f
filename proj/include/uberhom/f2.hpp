#pragma once

// Exact linear algebra over the two-element field.
//
// Matrices follow the row-vector convention: a BitMatrix with `rows` rows and
// `cols` columns describes a linear map F^rows -> F^cols, row r being the
// image of the r-th basis vector. A boundary matrix therefore has one row per
// source simplex listing the faces it hits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace uberhom {

class BitVector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector unit(std::size_t size, std::size_t index);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) noexcept {
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  bool operator==(const BitVector& other) const = default;

  bool any() const noexcept;
  std::size_t count() const noexcept;
  /// Smallest set index at or after `from`, or npos.
  std::size_t next_set(std::size_t from) const noexcept;
  std::size_t lowest() const noexcept { return next_set(0); }
  std::vector<std::size_t> ones() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::size_t cols, std::span<const BitVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    auto& w = data_[r * stride_ + (c >> 6)];
    if (value)
      w |= bit;
    else
      w &= ~bit;
  }
  void flip(std::size_t r, std::size_t c) noexcept {
    data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
  }

  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  /// XOR `v` into row r.
  void add_to_row(std::size_t r, const BitVector& v);

  /// Image of the row vector x (length rows()) under this map.
  BitVector apply(const BitVector& x) const;
  /// Composite "this, then next": (rows x cols) * (cols x next.cols).
  BitMatrix then(const BitMatrix& next) const;
  BitMatrix transposed() const;
  bool is_zero() const noexcept;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

/// A subspace of F^ambient_dim held in reduced row-echelon form. The pivot of
/// a vector is its lowest set index; pivots strictly increase and each pivot
/// column is zero in every other basis vector.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return vectors_.size(); }
  /// Basis vectors ordered by pivot.
  std::vector<BitVector> vectors() const;
  std::vector<std::size_t> pivots() const;

  /// Adds v to the span, keeping the basis reduced. Returns false when v was
  /// already in the span.
  bool insert(BitVector v);
  bool contains(BitVector v) const;
  /// v with every pivot coordinate cleared.
  BitVector reduce(BitVector v) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<BitVector> vectors_;        // insertion order
  std::vector<std::size_t> pivot_index_;  // column -> position in vectors_, or npos
};

std::size_t rank(const BitMatrix& m);
/// Vectors x with x * m = 0.
SubspaceBasis kernel_basis(const BitMatrix& m);
/// Span of the rows of m.
SubspaceBasis image_basis(const BitMatrix& m);

/// Homology of  C_{n+1} --in--> C_n --out--> C_{n-1}  at C_n, with chosen
/// representatives and a solver for class coordinates.
class HomologyWithBasis {
 public:
  HomologyWithBasis() = default;

  std::size_t rank() const noexcept { return representatives_.size(); }
  std::size_t chain_dim() const noexcept { return cycle_basis_.ambient_dim(); }
  const std::vector<BitVector>& representatives() const noexcept {
    return representatives_;
  }
  const SubspaceBasis& cycle_basis() const noexcept { return cycle_basis_; }
  const SubspaceBasis& boundary_basis() const noexcept { return boundary_basis_; }

  /// Coordinates c with z + sum c_i rep_i a boundary. Throws when z is not a
  /// cycle.
  BitVector class_coordinates(const BitVector& z) const;

  friend HomologyWithBasis homology_at(const BitMatrix& boundary_in,
                                       const BitMatrix& boundary_out);

 private:
  std::vector<BitVector> representatives_;
  SubspaceBasis cycle_basis_;
  SubspaceBasis boundary_basis_;
  // Echelon basis of the cycle space; each vector carries the representative
  // combination it contains.
  std::vector<BitVector> solver_vectors_;
  std::vector<BitVector> solver_tags_;
  std::vector<std::size_t> solver_pivot_;  // column -> solver row, or npos
};

/// Checks boundary_in * boundary_out = 0 and computes homology at the middle
/// term. Representatives are the cycle-basis vectors whose pivots are not
/// pivots of the boundary space.
HomologyWithBasis homology_at(const BitMatrix& boundary_in,
                              const BitMatrix& boundary_out);

/// Rank of homology at the middle term without building bases.
std::size_t homology_rank(const BitMatrix& boundary_in,
                          const BitMatrix& boundary_out);

/// Free function form of HomologyWithBasis::class_coordinates.
inline BitVector class_coordinates(const HomologyWithBasis& h,
                                   const BitVector& z) {
  return h.class_coordinates(z);
}

/// The augmentation C_0 -> F sending every vertex to the extra generator of
/// the reduced complex, as an n x 1 matrix.
BitMatrix augmentation(std::size_t vertex_count);

}  // namespace uberhom
