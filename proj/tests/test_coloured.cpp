#include <numeric>
#include <random>

#include "doctest.h"
#include "support/suite.hpp"
#include "uberhom/coloured.hpp"
#include "uberhom/error.hpp"

using namespace uberhom;

namespace {

std::size_t block_size(const ColouredComplex& c, int i, int k) { return c.block(i, k).size(); }

SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t m, std::size_t facets) {
  std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << m) - 1);
  std::vector<Simplex> gens;
  for (std::size_t f = 0; f < facets; ++f) {
    Simplex s = mask(rng);
    while (std::popcount(s) > 4) s &= s - 1;
    gens.push_back(s);
  }
  return SimplicialComplex::from_facet_masks(m, gens);
}

}  // namespace

TEST_CASE("colourings") {
  const auto e = Colouring::parse("100");
  CHECK(e.is_black(0));
  CHECK_FALSE(e.is_black(1));
  CHECK(e.norm() == 1);
  CHECK(e.complement().to_string() == "011");
  CHECK(weight(make_simplex({0, 1, 2}), e) == 2);
  CHECK(weight(make_simplex({0, 1, 2}), Colouring::all_white(3)) == 3);
  CHECK(weight(make_simplex({0, 1, 2}), Colouring::all_black(3)) == 0);
  CHECK_THROWS_AS(weight(make_simplex({3}), e), Error);
  CHECK_THROWS_AS(Colouring::parse("10a"), Error);
  CHECK_THROWS_AS(Colouring::parse(""), Error);
  CHECK(colourings_of_norm(5, 2).size() == 10);
  CHECK(colourings_of_norm(5, 0).size() == 1);
  CHECK(colourings_of_norm(5, 5).size() == 1);
  CHECK(colourings_of_norm(64, 1).size() == 64);
  CHECK_THROWS_AS(horizontal_homology(simplex_complex(2), Colouring::parse("10")), Error);
}

TEST_CASE("triangle with one black vertex") {
  const auto x = simplex_complex(2);
  const auto e = Colouring::parse("100");
  const ColouredComplex c(x, e);
  CHECK(block_size(c, 0, 0) == 1);
  CHECK(block_size(c, 0, 1) == 2);
  CHECK(block_size(c, 1, 1) == 2);
  CHECK(block_size(c, 1, 2) == 1);
  CHECK(block_size(c, 2, 2) == 1);
  CHECK(block_size(c, 1, 0) == 0);
  CHECK(horizontal_homology(x, e) == BigradedRanks{{{0, 0}, 1}});
  CHECK(diagonal_homology(x, e) == BigradedRanks{{{0, 1}, 1}});
  CHECK(diagonal_homology_via_complement(x, e) == BigradedRanks{{{0, 1}, 1}});
  const auto gens = horizontal_generators(x, e);
  REQUIRE(gens.size() == 1);
  CHECK(gens.at({0, 0}) == std::vector<std::vector<Simplex>>{{make_simplex({0})}});
}

TEST_CASE("tetrahedron with alternating colouring") {
  const auto x = simplex_complex(3);
  const auto e = Colouring::parse("1010");
  const ColouredComplex c(x, e);
  const std::map<Bigrading, std::size_t> expected = {{{0, 0}, 2}, {{0, 1}, 2}, {{1, 0}, 1}, {{1, 1}, 4},
                                                     {{1, 2}, 1}, {{2, 1}, 2}, {{2, 2}, 2}, {{3, 2}, 1}};
  for (int i = 0; i <= 3; ++i)
    for (int k = 0; k <= i + 1; ++k) {
      auto it = expected.find({i, k});
      CHECK(block_size(c, i, k) == (it == expected.end() ? 0 : it->second));
    }
  CHECK(horizontal_homology(x, e) == BigradedRanks{{{0, 0}, 1}});
}

TEST_CASE("differentials split the boundary") {
  for (const auto& [name, x] : suite::bundled()) {
    const std::size_t m = x.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const Colouring e(m, mask);
      const ColouredComplex c(x, e);
      for (int i = 0; i <= x.dim(); ++i)
        for (int k = 0; k <= i + 1; ++k) {
          CHECK(c.horizontal(i, k).then(c.horizontal(i - 1, k)).is_zero());
          CHECK(c.diagonal(i, k).then(c.diagonal(i - 1, k - 1)).is_zero());
          const auto hd = c.horizontal(i, k).then(c.diagonal(i - 1, k));
          const auto dh = c.diagonal(i, k).then(c.horizontal(i - 1, k - 1));
          CHECK(hd == dh);
          // Every face appears in exactly one of the two parts.
          for (std::size_t r = 0; r < c.block(i, k).size(); ++r) {
            const Simplex s = c.block(i, k)[r];
            const auto h = c.horizontal(i, k).row(r).count();
            const auto d = c.diagonal(i, k).row(r).count();
            CHECK(h == (i == 0 ? 0u : static_cast<std::size_t>(std::popcount(s & e.black_mask()))));
            CHECK(h + d == (i == 0 ? 0u : static_cast<std::size_t>(i + 1)));
          }
        }
    }
  }
}

TEST_CASE("extreme colourings") {
  for (const auto& [name, x] : suite::bundled()) {
    const std::size_t m = x.vertex_count();
    const auto black = horizontal_homology(x, Colouring::all_black(m));
    const auto h = homology_ranks(x);
    for (int i = 0; i <= x.dim(); ++i) {
      CHECK(rank_at(black, i, 0) == h[static_cast<std::size_t>(i)]);
      CHECK(rank_at(diagonal_homology(x, Colouring::all_white(m)), i, i + 1) == h[static_cast<std::size_t>(i)]);
    }
    auto flat = flatten(black);
    flat.resize(h.size(), 0);
    CHECK(flat == h);
    const auto white = horizontal_homology(x, Colouring::all_white(m));
    for (int i = 0; i <= x.dim(); ++i) CHECK(rank_at(white, i, i + 1) == x.simplices(i).size());
    CHECK(flatten(white) == x.f_vector());
  }
}

TEST_CASE("diagonal homology equals the complementary horizontal homology") {
  for (const auto& [name, x] : suite::bundled()) {
    if (x.vertex_count() > 5) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.vertex_count()); ++mask) {
      const Colouring e(x.vertex_count(), mask);
      CHECK(diagonal_homology(x, e) == diagonal_homology_via_complement(x, e));
    }
  }
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_complex(rng, 7, 5);
    const Colouring e(7, rng() & 0x7f);
    CHECK(diagonal_homology(x, e) == diagonal_homology_via_complement(x, e));
  }
}

TEST_CASE("graded Euler characteristic") {
  CHECK(graded_euler(simplex_complex(1), Colouring::parse("10")) == std::vector<std::int64_t>{1});
  for (const auto& [name, x] : suite::bundled()) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.vertex_count()); ++mask) {
      const Colouring e(x.vertex_count(), mask);
      const auto poly = graded_euler(x, e);
      CHECK(evaluate(poly, 1) == x.euler_characteristic());
      const auto bl = black_subcomplex(x, e);
      CHECK(evaluate(poly, 0) == (bl.is_void() ? 0 : bl.euler_characteristic()));
    }
  }
}

TEST_CASE("filtered homology") {
  for (const auto& [name, x] : suite::bundled()) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.vertex_count()); mask += 3) {
      const Colouring e(x.vertex_count(), mask);
      CHECK(filtered_homology(x, e, x.dim() + 1) == homology_ranks(x));
      const auto empty = filtered_homology(x, e, -1);
      CHECK(std::accumulate(empty.begin(), empty.end(), std::size_t{0}) == 0);
      // Level 0 is the black subcomplex.
      const auto bl = black_subcomplex(x, e);
      auto h0 = filtered_homology(x, e, 0);
      auto hb = bl.is_void() ? std::vector<std::size_t>{} : homology_ranks(bl);
      hb.resize(h0.size(), 0);
      CHECK(h0 == hb);
    }
  }
}

TEST_CASE("horizontal homology is invariant under relabelling") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_complex(rng, 6, 4);
    const Colouring e(6, rng() & 0x3f);
    const auto base = horizontal_homology(x, e);
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int p = 0; p < 20; ++p) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::uint64_t moved = 0;
      for (std::size_t v = 0; v < 6; ++v)
        if (e.is_black(v)) moved |= std::uint64_t{1} << perm[v];
      CHECK(horizontal_homology(relabel(x, perm), Colouring(6, moved)) == base);
    }
  }
}

TEST_CASE("single vertex") {
  const auto pt = simplex_complex(0);
  CHECK(horizontal_homology(pt, Colouring::parse("1")) == BigradedRanks{{{0, 0}, 1}});
  CHECK(horizontal_homology(pt, Colouring::parse("0")) == BigradedRanks{{{0, 1}, 1}});
}
