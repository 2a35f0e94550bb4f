#include "uberhom/f2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "uberhom/error.hpp"

namespace uberhom {

namespace {

constexpr std::size_t npos = BitVector::npos;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Row-reduction table: every stored vector has a distinct pivot (its lowest
// set bit at insertion time). Optionally tracks a tag vector per row.
class EchelonTable {
 public:
  EchelonTable(std::size_t dim, bool tagged) : pivot_row_(dim, npos), tagged_(tagged) {}

  // Clears all pivot coordinates of v, folding matching tags into `tag`.
  void reduce(BitVector& v, BitVector* tag) const {
    std::size_t pos = v.next_set(0);
    while (pos != npos) {
      const std::size_t r = pivot_row_[pos];
      if (r != npos) {
        v ^= rows_[r];
        if (tag != nullptr && tagged_) *tag ^= tags_[r];
      }
      pos = v.next_set(pos + 1);
    }
  }

  // Adds an already-reduced nonzero vector.
  void push(BitVector v, BitVector tag) {
    const std::size_t p = v.lowest();
    pivot_row_[p] = rows_.size();
    rows_.push_back(std::move(v));
    if (tagged_) tags_.push_back(std::move(tag));
  }

  std::size_t size() const { return rows_.size(); }
  std::vector<BitVector>& rows() { return rows_; }
  std::vector<BitVector>& tags() { return tags_; }
  std::vector<std::size_t>& pivot_rows() { return pivot_row_; }

 private:
  std::vector<BitVector> rows_;
  std::vector<BitVector> tags_;
  std::vector<std::size_t> pivot_row_;
  bool tagged_;
};

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVector BitVector::unit(std::size_t size, std::size_t index) {
  BitVector v(size);
  v.set(index);
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_)
    fail(ErrorKind::internal, "BitVector size mismatch in xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::next_set(std::size_t from) const noexcept {
  if (from >= size_) return npos;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) {
      const std::size_t bit = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      return bit < size_ ? bit : npos;
    }
    if (++w == words_.size()) return npos;
    word = words_[w];
  }
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (auto i = next_set(0); i != npos; i = next_set(i + 1)) out.push_back(i);
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::span<const BitVector> rows) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  auto words = v.words();
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, words.begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) fail(ErrorKind::internal, "BitMatrix::set_row size mismatch");
  std::copy(v.words().begin(), v.words().end(),
            data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BitMatrix::add_to_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) fail(ErrorKind::internal, "BitMatrix::add_to_row size mismatch");
  auto words = v.words();
  for (std::size_t w = 0; w < stride_; ++w) data_[r * stride_ + w] ^= words[w];
}

BitVector BitMatrix::apply(const BitVector& x) const {
  if (x.size() != rows_) fail(ErrorKind::internal, "BitMatrix::apply size mismatch");
  BitVector out(cols_);
  auto words = out.words();
  for (auto r = x.next_set(0); r != npos; r = x.next_set(r + 1))
    for (std::size_t w = 0; w < stride_; ++w) words[w] ^= data_[r * stride_ + w];
  return out;
}

BitMatrix BitMatrix::then(const BitMatrix& next) const {
  if (cols_ != next.rows_)
    fail(ErrorKind::internal, "BitMatrix::then shape mismatch");
  BitMatrix out(rows_, next.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!get(r, c)) continue;
      for (std::size_t w = 0; w < out.stride_; ++w)
        out.data_[r * out.stride_ + w] ^= next.data_[c * next.stride_ + w];
    }
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

bool BitMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](auto w) { return w == 0; });
}

// ------------------------------------------------------------ SubspaceBasis

std::vector<BitVector> SubspaceBasis::vectors() const {
  std::vector<BitVector> out;
  out.reserve(vectors_.size());
  for (std::size_t c = 0; c < pivot_index_.size(); ++c)
    if (pivot_index_[c] != npos) out.push_back(vectors_[pivot_index_[c]]);
  return out;
}

std::vector<std::size_t> SubspaceBasis::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pivot_index_.size(); ++c)
    if (pivot_index_[c] != npos) out.push_back(c);
  return out;
}

BitVector SubspaceBasis::reduce(BitVector v) const {
  if (v.size() != ambient_dim_) fail(ErrorKind::internal, "SubspaceBasis size mismatch");
  if (pivot_index_.empty()) return v;
  std::size_t pos = v.next_set(0);
  while (pos != npos) {
    const std::size_t r = pivot_index_[pos];
    if (r != npos) v ^= vectors_[r];
    pos = v.next_set(pos + 1);
  }
  return v;
}

bool SubspaceBasis::contains(BitVector v) const { return !reduce(std::move(v)).any(); }

bool SubspaceBasis::insert(BitVector v) {
  if (pivot_index_.empty()) pivot_index_.assign(ambient_dim_, npos);
  v = reduce(std::move(v));
  if (!v.any()) return false;
  const std::size_t p = v.lowest();
  for (auto& u : vectors_)
    if (u.get(p)) u ^= v;
  pivot_index_[p] = vectors_.size();
  vectors_.push_back(std::move(v));
  return true;
}

// ------------------------------------------------------------- elimination

std::size_t rank(const BitMatrix& m) {
  EchelonTable table(m.cols(), false);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector v = m.row(r);
    table.reduce(v, nullptr);
    if (v.any()) table.push(std::move(v), {});
  }
  return table.size();
}

SubspaceBasis kernel_basis(const BitMatrix& m) {
  SubspaceBasis kernel(m.rows());
  EchelonTable table(m.cols(), true);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector v = m.row(r);
    BitVector tag = BitVector::unit(m.rows(), r);
    table.reduce(v, &tag);
    if (v.any())
      table.push(std::move(v), std::move(tag));
    else
      kernel.insert(std::move(tag));
  }
  return kernel;
}

SubspaceBasis image_basis(const BitMatrix& m) {
  SubspaceBasis image(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) image.insert(m.row(r));
  return image;
}

BitMatrix augmentation(std::size_t vertex_count) {
  BitMatrix m(vertex_count, 1);
  for (std::size_t r = 0; r < vertex_count; ++r) m.set(r, 0);
  return m;
}

// -------------------------------------------------------------- homology

namespace {

void check_composable(const BitMatrix& in, const BitMatrix& out) {
  if (in.cols() != out.rows())
    fail(ErrorKind::internal, "homology_at: boundary shapes do not compose (" +
                                  std::to_string(in.cols()) + " vs " +
                                  std::to_string(out.rows()) + ")");
}

}  // namespace

HomologyWithBasis homology_at(const BitMatrix& boundary_in, const BitMatrix& boundary_out) {
  check_composable(boundary_in, boundary_out);
  if (!boundary_in.then(boundary_out).is_zero())
    fail(ErrorKind::internal, "homology_at: composite of boundary maps is nonzero");

  HomologyWithBasis h;
  h.cycle_basis_ = kernel_basis(boundary_out);
  h.boundary_basis_ = image_basis(boundary_in);
  const std::size_t n = boundary_out.rows();

  const auto boundary_pivots = h.boundary_basis_.pivots();
  std::vector<bool> is_boundary_pivot(n, false);
  for (auto p : boundary_pivots) is_boundary_pivot[p] = true;
  for (auto& z : h.cycle_basis_.vectors())
    if (!is_boundary_pivot[z.lowest()]) h.representatives_.push_back(z);

  const std::size_t r = h.representatives_.size();
  EchelonTable table(n, true);
  auto add = [&](BitVector v, BitVector tag) {
    table.reduce(v, &tag);
    if (v.any()) table.push(std::move(v), std::move(tag));
  };
  for (auto& b : h.boundary_basis_.vectors()) add(b, BitVector(r));
  for (std::size_t i = 0; i < r; ++i) add(h.representatives_[i], BitVector::unit(r, i));
  h.solver_vectors_ = std::move(table.rows());
  h.solver_tags_ = std::move(table.tags());
  h.solver_pivot_ = std::move(table.pivot_rows());
  return h;
}

std::size_t homology_rank(const BitMatrix& boundary_in, const BitMatrix& boundary_out) {
  check_composable(boundary_in, boundary_out);
  return boundary_out.rows() - rank(boundary_out) - rank(boundary_in);
}

BitVector HomologyWithBasis::class_coordinates(const BitVector& z) const {
  const std::size_t n = chain_dim();
  if (z.size() != n) fail(ErrorKind::internal, "class_coordinates: chain length mismatch");
  BitVector v = z;
  BitVector coords(rank());
  std::size_t pos = v.next_set(0);
  while (pos != npos) {
    const std::size_t r = solver_pivot_.empty() ? npos : solver_pivot_[pos];
    if (r == npos)
      fail(ErrorKind::internal, "class_coordinates: chain is not a cycle");
    v ^= solver_vectors_[r];
    coords ^= solver_tags_[r];
    pos = v.next_set(pos + 1);
  }
  return coords;
}

}  // namespace uberhom
