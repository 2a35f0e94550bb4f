#include "uberhom/uber.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "uberhom/error.hpp"
#include "uberhom/parallel.hpp"

namespace uberhom {

std::size_t rank_at(const TriGradedRanks& ranks, int j, int i, int k) {
  const auto it = ranks.find({j, i, k});
  return it == ranks.end() ? 0 : it->second;
}

BigradedRanks uber_level(const TriGradedRanks& ranks, int j) {
  BigradedRanks out;
  for (const auto& [g, r] : ranks)
    if (std::get<0>(g) == j) out[{std::get<1>(g), std::get<2>(g)}] = r;
  return out;
}

std::size_t cube_cap_from_env() {
  const char* raw = std::getenv("UBERHOM_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultCubeCap;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    fail(ErrorKind::parse, "UBERHOM_CAP is not a nonnegative integer: " + std::string(text));
  return value;
}

std::vector<Simplex> d_eta_chain(std::span<const Simplex> chain, std::size_t v) {
  std::vector<Simplex> out;
  for (Simplex s : chain)
    if (!simplex_contains(s, v)) out.push_back(s);
  return out;
}

namespace {

// Simplices of dimension i and weight k under `black`, by increasing mask.
std::vector<Simplex> block_of(const SimplicialComplex& x, std::uint64_t black, int i, int k) {
  std::vector<Simplex> out;
  if (i < 0 || i > x.dim()) return out;
  for (Simplex s : x.simplices(i))
    if (std::popcount(s & ~black) == k) out.push_back(s);
  return out;
}

std::vector<Simplex> chain_of(const BitVector& bits, std::span<const Simplex> block) {
  std::vector<Simplex> out;
  for (auto idx : bits.ones()) out.push_back(block[idx]);
  return out;
}

BitVector vector_of(std::span<const Simplex> chain, std::span<const Simplex> block) {
  BitVector out(block.size());
  for (Simplex s : chain) {
    const auto it = std::lower_bound(block.begin(), block.end(), s);
    if (it == block.end() || *it != s)
      fail(ErrorKind::internal, "simplex " + simplex_to_string(s) + " missing from the target block");
    out.flip(static_cast<std::size_t>(it - block.begin()));
  }
  return out;
}

// The image of a representative must be a cycle in the target; the solver
// throws otherwise.
BitVector image_coordinates(const HomologyWithBasis& target, const BitVector& image) {
  try {
    return target.class_coordinates(image);
  } catch (const Error& e) {
    fail(ErrorKind::internal, std::string("d_eta is not a chain map: ") + e.what());
  }
}

}  // namespace

BitMatrix d_eta_matrix(const ColouredComplex& source, const HomologyWithBasis& source_homology,
                       const ColouredComplex& target, const HomologyWithBasis& target_homology, Bigrading g,
                       std::size_t v) {
  const auto& e = source.colouring();
  const auto& f = target.colouring();
  if (&source.complex() != &target.complex() && !(source.complex() == target.complex()))
    fail(ErrorKind::invalid_argument, "d_eta needs both colourings on the same complex");
  if (v >= e.length() || e.is_black(v) || f.length() != e.length() ||
      f.black_mask() != (e.black_mask() | (std::uint64_t{1} << v)))
    fail(ErrorKind::invalid_argument, "target colouring must turn exactly vertex " + std::to_string(v) + " black");
  const auto from = source.block(g.first, g.second);
  const auto to = target.block(g.first, g.second);
  if (source_homology.chain_dim() != from.size() || target_homology.chain_dim() != to.size())
    fail(ErrorKind::dimension_mismatch, "homology does not match the block sizes");
  BitMatrix m(source_homology.rank(), target_homology.rank());
  for (std::size_t r = 0; r < source_homology.rank(); ++r) {
    const auto image = d_eta_chain(chain_of(source_homology.representatives()[r], from), v);
    m.set_row(r, image_coordinates(target_homology, vector_of(image, to)));
  }
  return m;
}

std::vector<Bigrading> all_bigradings(const SimplicialComplex& x) {
  std::vector<Bigrading> out;
  for (int i = 0; i <= x.dim(); ++i)
    for (int k = 0; k <= i + 1; ++k) out.emplace_back(i, k);
  return out;
}

namespace {

using BinomialTable = std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1>;

const BinomialTable& binomials() {
  static const BinomialTable table = [] {
    BinomialTable t{};
    for (std::size_t n = 0; n <= kMaxVertices; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

// Position of a mask among all masks of the same popcount in increasing
// order (colexicographic rank).
std::size_t colex_rank(std::uint64_t mask) {
  const auto& c = binomials();
  std::size_t r = 0;
  std::size_t t = 1;
  for (; mask != 0; mask &= mask - 1, ++t) r += c[static_cast<std::size_t>(std::countr_zero(mask))][t];
  return static_cast<std::size_t>(r);
}

}  // namespace

ColourCubeLevel build_cube_level(const SimplicialComplex& x, int j, std::span<const Bigrading> bigradings,
                                 std::size_t jobs) {
  if (jobs == 0) jobs = default_jobs();
  ColourCubeLevel level;
  level.j = j;
  level.colourings = colourings_of_norm(x.vertex_count(), static_cast<std::size_t>(j));
  level.bigradings.assign(bigradings.begin(), bigradings.end());
  const std::size_t n = level.colourings.size();
  level.homology.resize(n);
  parallel_for(n, jobs, [&](std::size_t a) {
    const ColouredComplex c(x, level.colourings[a]);
    auto& h = level.homology[a];
    h.reserve(bigradings.size());
    for (const auto& [i, k] : bigradings) h.push_back(c.horizontal_homology_at(i, k));
  });
  level.offsets.assign(bigradings.size(), std::vector<std::size_t>(n + 1, 0));
  for (std::size_t g = 0; g < bigradings.size(); ++g)
    for (std::size_t a = 0; a < n; ++a) level.offsets[g][a + 1] = level.offsets[g][a] + level.homology[a][g].rank();
  return level;
}

std::vector<BitMatrix> cube_differential(const SimplicialComplex& x, const ColourCubeLevel& from,
                                         const ColourCubeLevel& to, std::size_t jobs) {
  if (jobs == 0) jobs = default_jobs();
  if (to.j != from.j + 1 || to.bigradings != from.bigradings)
    fail(ErrorKind::invalid_argument, "cube levels are not consecutive");
  const std::size_t gs = from.bigradings.size();
  std::vector<BitMatrix> out;
  out.reserve(gs);
  for (std::size_t g = 0; g < gs; ++g) out.emplace_back(from.total(g), to.total(g));

  // Each source colouring owns its rows, so workers never share a word.
  parallel_for(from.colourings.size(), jobs, [&](std::size_t a) {
    const std::uint64_t black = from.colourings[a].black_mask();
    for (std::size_t g = 0; g < gs; ++g) {
      const auto& h = from.homology[a][g];
      if (h.rank() == 0) continue;
      const auto [i, k] = from.bigradings[g];
      const auto source_block = block_of(x, black, i, k);
      std::vector<std::vector<Simplex>> reps;
      for (const auto& rep : h.representatives()) reps.push_back(chain_of(rep, source_block));
      for (std::uint64_t w = x.vertex_mask() & ~black; w != 0; w &= w - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(w));
        const std::uint64_t target_black = black | (std::uint64_t{1} << v);
        const std::size_t b = colex_rank(target_black);
        const auto& th = to.homology[b][g];
        if (th.rank() == 0) continue;
        const auto target_block = block_of(x, target_black, i, k);
        const std::size_t col0 = to.offsets[g][b];
        for (std::size_t r = 0; r < reps.size(); ++r) {
          const auto coords = image_coordinates(th, vector_of(d_eta_chain(reps[r], v), target_block));
          for (auto c : coords.ones()) out[g].flip(from.offsets[g][a] + r, col0 + c);
        }
      }
    }
  });
  return out;
}

TriGradedRanks uber_homology(const SimplicialComplex& x, const UberOptions& options) {
  const std::size_t m = x.vertex_count();
  if (m > options.cap)
    fail(ErrorKind::resource_cap, "complex has " + std::to_string(m) + " vertices, above the cube cap of " +
                                      std::to_string(options.cap));
  if (x.vertex_mask() != (m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1))
    fail(ErrorKind::invalid_argument, "every vertex of the universe must be a simplex");
  const int top = static_cast<int>(m);
  const int lo = options.first_level;
  const int hi = options.last_level < 0 ? top : options.last_level;
  if (lo < 0 || lo > hi || hi > top) fail(ErrorKind::invalid_argument, "cube level range out of bounds");
  const std::size_t jobs = options.jobs == 0 ? default_jobs() : options.jobs;

  std::vector<Bigrading> gradings = options.bigradings.empty() ? all_bigradings(x) : options.bigradings;
  for (const auto& [i, k] : gradings)
    if (i < 0 || i > x.dim() || k < 0 || k > i + 1)
      fail(ErrorKind::invalid_argument, "bigrading (" + std::to_string(i) + "," + std::to_string(k) + ") out of range");
  std::sort(gradings.begin(), gradings.end());
  gradings.erase(std::unique(gradings.begin(), gradings.end()), gradings.end());
  const std::size_t gs = gradings.size();

  const int start = std::max(lo - 1, 0);
  const int stop = std::min(hi + 1, top);
  // d_rank[j - start][g] = rank d^j.
  std::vector<std::vector<std::size_t>> d_rank;
  std::vector<std::vector<std::size_t>> totals;  // [j - start][g]
  std::vector<BitMatrix> previous;

  ColourCubeLevel current = build_cube_level(x, start, gradings, jobs);
  for (int j = start;; ++j) {
    std::vector<std::size_t> t(gs);
    for (std::size_t g = 0; g < gs; ++g) t[g] = current.total(g);
    totals.push_back(std::move(t));
    if (j == stop) break;
    ColourCubeLevel next = build_cube_level(x, j + 1, gradings, jobs);
    auto d = cube_differential(x, current, next, jobs);
    std::vector<std::size_t> r(gs);
    parallel_for(gs, jobs, [&](std::size_t g) {
      r[g] = rank(d[g]);
      if (options.verify_square_zero && !previous.empty() && !previous[g].then(d[g]).is_zero())
        fail(ErrorKind::internal, "cube differential does not square to zero at level " + std::to_string(j));
    });
    d_rank.push_back(std::move(r));
    if (options.verify_square_zero) previous = std::move(d);
    current = std::move(next);
  }

  TriGradedRanks out;
  for (int j = lo; j <= hi; ++j) {
    const auto idx = static_cast<std::size_t>(j - start);
    for (std::size_t g = 0; g < gs; ++g) {
      std::size_t value = totals[idx][g];
      if (j < top) value -= d_rank[idx][g];
      if (j > 0) value -= d_rank[idx - 1][g];
      if (value != 0) out[{j, gradings[g].first, gradings[g].second}] = value;
    }
  }
  return out;
}

std::vector<Simplex> star_intersection(const SimplicialComplex& x) {
  std::vector<Simplex> out;
  for (Simplex s : x.simplices()) {
    bool inside = true;
    for (std::uint64_t w = x.vertex_mask(); w != 0 && inside; w &= w - 1) inside = x.contains(s | (w & (~w + 1)));
    if (inside) out.push_back(s);
  }
  return out;
}

BigradedRanks uber_degree0_fast(const SimplicialComplex& x) {
  BigradedRanks out;
  for (Simplex s : star_intersection(x)) ++out[{simplex_dim(s), simplex_dim(s) + 1}];
  return out;
}

namespace {

SimplicialComplex simplex_link(const SimplicialComplex& x, Simplex s) {
  std::vector<Simplex> gens;
  for (Simplex t : x.simplices())
    if ((t & s) == s && t != s) gens.push_back(t & ~s);
  return SimplicialComplex::subcomplex(x.vertex_count(), gens);
}

bool is_sphere_homology(const std::map<int, std::size_t>& reduced, int d) {
  return reduced == std::map<int, std::size_t>{{d, 1}};
}

BigradedRanks homology_at_weight(const BigradedRanks& h, int k) {
  BigradedRanks out;
  for (const auto& [g, r] : h)
    if (g.second == k) out[g] = r;
  return out;
}

}  // namespace

bool is_homology_manifold(const SimplicialComplex& x) {
  if (x.is_void()) return false;
  const int n = x.dim();
  for (Simplex s : x.simplices())
    if (!is_sphere_homology(reduced_homology_ranks(simplex_link(x, s)), n - simplex_dim(s) - 1)) return false;
  return true;
}

TopDegreeReport uber_topdegree_check(const SimplicialComplex& x, const UberOptions& options) {
  if (!is_homology_manifold(x))
    fail(ErrorKind::invalid_argument, "links do not have sphere homology: not a closed homology manifold");
  TopDegreeReport report;
  report.n = x.dim();
  report.m = x.vertex_count();
  UberOptions top = options;
  top.first_level = top.last_level = static_cast<int>(report.m);
  top.bigradings.clear();
  report.top = uber_level(uber_homology(x, top), static_cast<int>(report.m));
  report.top_ok = report.top == BigradedRanks{{{report.n, 0}, 1}};

  report.links_ok = report.complements_ok = true;
  for (std::size_t v = 0; v < report.m; ++v) {
    TopDegreeReport::VertexCase c;
    c.vertex = v;
    const auto h = horizontal_homology(x, Colouring::elementary(report.m, v).complement());
    c.weight1 = homology_at_weight(h, 1);
    c.weight0 = homology_at_weight(h, 0);
    // A weight-one simplex is v joined to a simplex of the link, including
    // the empty one.
    for (const auto& [d, r] : reduced_homology_ranks(link(x, v))) c.link_expected[{d + 1, 1}] = r;
    const auto rest = homology_ranks(delete_star(x, v));
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (rest[i] != 0) c.complement_expected[{static_cast<int>(i), 0}] = rest[i];
    report.links_ok = report.links_ok && c.weight1 == c.link_expected;
    report.complements_ok = report.complements_ok && c.weight0 == c.complement_expected;
    report.vertices.push_back(std::move(c));
  }
  return report;
}

ConeSuspensionReport cone_suspension_checks(const SimplicialComplex& x, const UberOptions& options) {
  const std::size_t m = x.vertex_count();
  const int top = static_cast<int>(m);
  ConeSuspensionReport report;
  UberOptions opts = options;
  opts.bigradings.clear();
  auto levels = [&](const SimplicialComplex& c, int j) {
    opts.first_level = opts.last_level = j;
    return uber_level(uber_homology(c, opts), j);
  };

  const auto cx = cone(x);
  report.cone_top = levels(cx, top + 1);
  report.cone_degree0 = levels(cx, 0);
  // The cone of the star intersection, with the apex m.
  const Simplex apex = Simplex{1} << m;
  ++report.cone_degree0_expected[{0, 1}];
  for (Simplex s : star_intersection(x)) {
    ++report.cone_degree0_expected[{simplex_dim(s), simplex_dim(s) + 1}];
    ++report.cone_degree0_expected[{simplex_dim(s | apex), simplex_dim(s | apex) + 1}];
  }

  const auto sx = suspension(x);
  report.degree0 = levels(x, 0);
  report.suspension_degree0 = levels(sx, 0);
  if (is_homology_manifold(x)) {
    report.suspension_top = levels(sx, top + 2);
    report.suspension_top_expected = BigradedRanks{{{x.dim() + 1, 0}, 1}};
  }
  return report;
}

}  // namespace uberhom
