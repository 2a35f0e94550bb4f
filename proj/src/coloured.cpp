#include "uberhom/coloured.hpp"

#include <bit>

#include "uberhom/error.hpp"

namespace uberhom {

// --------------------------------------------------------------- Colouring

Colouring::Colouring(std::size_t length, std::uint64_t black_mask) : length_(length), black_(black_mask) {
  if (length == 0) fail(ErrorKind::invalid_argument, "colouring of length 0");
  if (length > kMaxVertices) fail(ErrorKind::resource_cap, "colouring longer than 64");
  if (length < 64 && (black_mask >> length) != 0)
    fail(ErrorKind::invalid_argument, "colouring mask has bits beyond its length");
}

Colouring Colouring::parse(std::string_view bits) {
  if (bits.empty()) fail(ErrorKind::parse, "empty colouring");
  if (bits.size() > kMaxVertices) fail(ErrorKind::parse, "colouring longer than 64");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      mask |= std::uint64_t{1} << i;
    else if (bits[i] != '0')
      fail(ErrorKind::parse, "colouring must be a string of 0s and 1s: '" + std::string(bits) + "'");
  }
  return Colouring(bits.size(), mask);
}

Colouring Colouring::all_black(std::size_t length) {
  return Colouring(length, length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1);
}

Colouring Colouring::all_white(std::size_t length) { return Colouring(length, 0); }

Colouring Colouring::elementary(std::size_t length, std::size_t i) {
  if (i >= length) fail(ErrorKind::invalid_argument, "elementary colouring index out of range");
  return Colouring(length, std::uint64_t{1} << i);
}

std::uint64_t Colouring::white_mask() const noexcept { return all_black(length_).black_ & ~black_; }

std::size_t Colouring::norm() const noexcept { return static_cast<std::size_t>(std::popcount(black_)); }

Colouring Colouring::complement() const { return Colouring(length_, white_mask()); }

std::string Colouring::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (is_black(i)) s[i] = '1';
  return s;
}

int weight(Simplex s, const Colouring& colouring) {
  if (colouring.length() < 64 && (s >> colouring.length()) != 0)
    fail(ErrorKind::dimension_mismatch, "simplex uses a vertex beyond the colouring length");
  return std::popcount(s & ~colouring.black_mask());
}

std::size_t rank_at(const BigradedRanks& ranks, int i, int k) {
  auto it = ranks.find({i, k});
  return it == ranks.end() ? 0 : it->second;
}

void check_lengths(const SimplicialComplex& x, const Colouring& colouring) {
  if (x.vertex_count() != colouring.length())
    fail(ErrorKind::dimension_mismatch, "colouring length " + std::to_string(colouring.length()) +
                                            " does not match vertex count " + std::to_string(x.vertex_count()));
}

// --------------------------------------------------------- ColouredComplex

ColouredComplex::ColouredComplex(const SimplicialComplex& x, const Colouring& colouring)
    : complex_(&x), colouring_(colouring) {
  check_lengths(x, colouring);
  const int top = x.dim();
  blocks_.resize(static_cast<std::size_t>(top + 1));
  position_.resize(static_cast<std::size_t>(top + 1));
  const std::uint64_t white = colouring.white_mask();
  for (int i = 0; i <= top; ++i) {
    auto& row = blocks_[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(i + 2));
    auto layer = x.simplices(i);
    auto& pos = position_[static_cast<std::size_t>(i)];
    pos.resize(layer.size());
    for (std::size_t idx = 0; idx < layer.size(); ++idx) {
      auto& b = row[static_cast<std::size_t>(std::popcount(layer[idx] & white))];
      pos[idx] = b.size();
      b.push_back(layer[idx]);
    }
  }
}

std::span<const Simplex> ColouredComplex::block(int i, int k) const noexcept {
  if (i < 0 || i >= static_cast<int>(blocks_.size()) || k < 0 || k > i + 1) return {};
  return blocks_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
}

std::size_t ColouredComplex::position(Simplex s) const noexcept {
  const std::size_t idx = complex_->index_of(s);
  if (idx == BitVector::npos) return idx;
  return position_[static_cast<std::size_t>(simplex_dim(s))][idx];
}

namespace {

BitMatrix drop_vertices(const ColouredComplex& c, int i, int k, int target_k, std::uint64_t droppable) {
  const auto rows = c.block(i, k);
  const auto cols = c.block(i - 1, target_k);
  BitMatrix m(rows.size(), cols.size());
  if (cols.empty()) return m;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::uint64_t rest = rows[r] & droppable; rest != 0; rest &= rest - 1)
      m.set(r, c.position(rows[r] & ~(rest & (~rest + 1))));
  return m;
}

}  // namespace

BitMatrix ColouredComplex::horizontal(int i, int k) const {
  return drop_vertices(*this, i, k, k, colouring_.black_mask());
}

BitMatrix ColouredComplex::diagonal(int i, int k) const {
  return drop_vertices(*this, i, k, k - 1, colouring_.white_mask());
}

HomologyWithBasis ColouredComplex::horizontal_homology_at(int i, int k) const {
  return homology_at(horizontal(i + 1, k), horizontal(i, k));
}

std::size_t ColouredComplex::horizontal_rank_at(int i, int k) const {
  const auto n = block(i, k).size();
  if (n == 0) return 0;
  return n - rank(horizontal(i, k)) - rank(horizontal(i + 1, k));
}

std::size_t ColouredComplex::diagonal_rank_at(int i, int k) const {
  const auto n = block(i, k).size();
  if (n == 0) return 0;
  return n - rank(diagonal(i, k)) - rank(diagonal(i + 1, k + 1));
}

// --------------------------------------------------------------- homology

BigradedRanks horizontal_homology(const SimplicialComplex& x, const Colouring& colouring) {
  const ColouredComplex c(x, colouring);
  BigradedRanks out;
  for (int i = 0; i <= c.dim(); ++i)
    for (int k = 0; k <= i + 1; ++k)
      if (auto r = c.horizontal_rank_at(i, k); r != 0) out[{i, k}] = r;
  return out;
}

std::map<Bigrading, std::vector<std::vector<Simplex>>> horizontal_generators(const SimplicialComplex& x,
                                                                             const Colouring& colouring) {
  const ColouredComplex c(x, colouring);
  std::map<Bigrading, std::vector<std::vector<Simplex>>> out;
  for (int i = 0; i <= c.dim(); ++i)
    for (int k = 0; k <= i + 1; ++k) {
      if (c.block(i, k).empty()) continue;
      const auto h = c.horizontal_homology_at(i, k);
      for (const auto& rep : h.representatives()) {
        std::vector<Simplex> chain;
        for (auto idx : rep.ones()) chain.push_back(c.block(i, k)[idx]);
        out[{i, k}].push_back(std::move(chain));
      }
    }
  return out;
}

BigradedRanks diagonal_homology(const SimplicialComplex& x, const Colouring& colouring) {
  const ColouredComplex c(x, colouring);
  BigradedRanks out;
  for (int i = 0; i <= c.dim(); ++i)
    for (int k = 0; k <= i + 1; ++k)
      if (auto r = c.diagonal_rank_at(i, k); r != 0) out[{i, k}] = r;
  return out;
}

BigradedRanks diagonal_homology_via_complement(const SimplicialComplex& x, const Colouring& colouring) {
  BigradedRanks out;
  for (const auto& [grading, r] : horizontal_homology(x, colouring.complement()))
    out[{grading.first, grading.first + 1 - grading.second}] = r;
  return out;
}

std::vector<std::size_t> filtered_homology(const SimplicialComplex& x, const Colouring& colouring, int k) {
  check_lengths(x, colouring);
  const int top = x.dim();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
  if (k < 0) return ranks;
  // Chains of weight at most k, reindexed densely per dimension.
  std::vector<std::vector<Simplex>> cells(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<std::size_t>> where(static_cast<std::size_t>(top + 1));
  for (int i = 0; i <= top; ++i) {
    auto layer = x.simplices(i);
    auto& w = where[static_cast<std::size_t>(i)];
    w.assign(layer.size(), BitVector::npos);
    for (std::size_t idx = 0; idx < layer.size(); ++idx)
      if (weight(layer[idx], colouring) <= k) {
        w[idx] = cells[static_cast<std::size_t>(i)].size();
        cells[static_cast<std::size_t>(i)].push_back(layer[idx]);
      }
  }
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 2), 0);
  for (int i = 1; i <= top; ++i) {
    const auto& rows = cells[static_cast<std::size_t>(i)];
    BitMatrix m(rows.size(), cells[static_cast<std::size_t>(i - 1)].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (Simplex rest = rows[r]; rest != 0; rest &= rest - 1) {
        const Simplex face = rows[r] & ~(rest & (~rest + 1));
        m.set(r, where[static_cast<std::size_t>(i - 1)][x.index_of(face)]);
      }
    boundary_rank[static_cast<std::size_t>(i)] = rank(m);
  }
  for (int i = 0; i <= top; ++i)
    ranks[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i)].size() -
                                         boundary_rank[static_cast<std::size_t>(i)] -
                                         boundary_rank[static_cast<std::size_t>(i + 1)];
  return ranks;
}

std::vector<std::int64_t> graded_euler(const SimplicialComplex& x, const Colouring& colouring) {
  std::vector<std::int64_t> poly(static_cast<std::size_t>(x.dim() + 2), 0);
  for (const auto& [grading, r] : horizontal_homology(x, colouring))
    poly[static_cast<std::size_t>(grading.second)] += (grading.first % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(r);
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

std::int64_t evaluate(std::span<const std::int64_t> poly, std::int64_t t) {
  std::int64_t acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<std::size_t> flatten(const BigradedRanks& ranks) {
  std::vector<std::size_t> out;
  for (const auto& [grading, r] : ranks) {
    const auto i = static_cast<std::size_t>(grading.first);
    if (out.size() <= i) out.resize(i + 1, 0);
    out[i] += r;
  }
  return out;
}

SimplicialComplex black_subcomplex(const SimplicialComplex& x, const Colouring& colouring) {
  check_lengths(x, colouring);
  std::vector<Simplex> gens;
  for (Simplex s : x.simplices())
    if ((s & ~colouring.black_mask()) == 0) gens.push_back(s);
  return SimplicialComplex::subcomplex(x.vertex_count(), gens);
}

std::vector<Colouring> colourings_of_norm(std::size_t m, std::size_t j) {
  if (m == 0 || m > kMaxVertices) fail(ErrorKind::invalid_argument, "colouring length out of range");
  if (j > m) return {};
  std::vector<Colouring> out;
  if (j == 0) return {Colouring(m, 0)};
  const std::uint64_t limit = m == 64 ? 0 : std::uint64_t{1} << m;
  std::uint64_t mask = j == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << j) - 1;
  while (true) {
    out.emplace_back(m, mask);
    // Next mask with the same popcount (Gosper).
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    if (ripple == 0) break;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
    if (limit != 0 && mask >= limit) break;
  }
  return out;
}

}  // namespace uberhom
