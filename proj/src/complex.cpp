#include "uberhom/complex.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "uberhom/error.hpp"

namespace uberhom {

namespace {

void check_universe(std::size_t m) {
  if (m == 0) fail(ErrorKind::invalid_argument, "a complex needs at least one vertex");
  if (m > kMaxVertices)
    fail(ErrorKind::resource_cap,
         "vertex count " + std::to_string(m) + " exceeds the limit of 64");
}

Simplex universe_mask(std::size_t m) {
  return m == 64 ? ~Simplex{0} : (Simplex{1} << m) - 1;
}

bool lex_less(Simplex a, Simplex b) {
  if (simplex_dim(a) != simplex_dim(b)) return simplex_dim(a) < simplex_dim(b);
  // Same size: the first differing vertex decides.
  const Simplex diff = a ^ b;
  const Simplex first = diff & (~diff + 1);
  return (a & first) != 0;
}

}  // namespace

Simplex make_simplex(std::initializer_list<std::size_t> vertices) {
  return make_simplex(std::span<const std::size_t>(vertices.begin(), vertices.size()));
}

Simplex make_simplex(std::span<const std::size_t> vertices) {
  Simplex s = 0;
  for (auto v : vertices) {
    if (v >= kMaxVertices) fail(ErrorKind::invalid_argument, "vertex index out of range");
    s |= Simplex{1} << v;
  }
  return s;
}

std::vector<std::size_t> simplex_vertices(Simplex s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

std::string simplex_to_string(Simplex s) {
  std::string out = "<";
  bool first = true;
  for (auto v : simplex_vertices(s)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + ">";
}

// ---------------------------------------------------------- construction

SimplicialComplex SimplicialComplex::subcomplex(std::size_t m, std::span<const Simplex> generators) {
  check_universe(m);
  const Simplex universe = universe_mask(m);
  std::unordered_set<Simplex> all;
  for (Simplex g : generators) {
    if (g == 0) fail(ErrorKind::invalid_argument, "empty simplex");
    if ((g & ~universe) != 0)
      fail(ErrorKind::invalid_argument,
           "simplex " + simplex_to_string(g) + " uses a vertex outside [0, " + std::to_string(m) + ")");
    if (all.contains(g)) continue;
    for (Simplex sub = g; sub != 0; sub = (sub - 1) & g) all.insert(sub);
  }
  SimplicialComplex x;
  x.vertex_count_ = m;
  x.size_ = all.size();
  for (Simplex s : all) {
    const auto d = static_cast<std::size_t>(simplex_dim(s));
    if (x.by_dim_.size() <= d) x.by_dim_.resize(d + 1);
    x.by_dim_[d].push_back(s);
    if (d == 0) x.vertex_mask_ |= s;
  }
  for (auto& layer : x.by_dim_) std::sort(layer.begin(), layer.end());
  return x;
}

SimplicialComplex SimplicialComplex::from_facet_masks(std::size_t m, std::span<const Simplex> facets) {
  check_universe(m);
  std::vector<Simplex> gens(facets.begin(), facets.end());
  for (std::size_t v = 0; v < m; ++v) gens.push_back(Simplex{1} << v);
  return subcomplex(m, gens);
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t m,
                                                 const std::vector<std::vector<std::size_t>>& facets) {
  check_universe(m);
  std::vector<Simplex> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.empty()) fail(ErrorKind::invalid_argument, "empty facet");
    for (auto v : f)
      if (v >= m)
        fail(ErrorKind::invalid_argument,
             "facet vertex " + std::to_string(v) + " out of range for m = " + std::to_string(m));
    masks.push_back(make_simplex(f));
  }
  return from_facet_masks(m, masks);
}

// ---------------------------------------------------------------- queries

std::span<const Simplex> SimplicialComplex::simplices(int d) const noexcept {
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return {};
  return by_dim_[static_cast<std::size_t>(d)];
}

std::vector<Simplex> SimplicialComplex::simplices() const {
  std::vector<Simplex> out;
  out.reserve(size_);
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = dim(); d >= 0; --d) {
    for (Simplex s : simplices(d)) {
      bool covered = false;
      for (Simplex t : simplices(d + 1))
        if ((s & t) == s) {
          covered = true;
          break;
        }
      if (!covered) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& layer : by_dim_) f.push_back(layer.size());
  return f;
}

bool SimplicialComplex::contains(Simplex s) const noexcept { return index_of(s) != BitVector::npos; }

std::size_t SimplicialComplex::index_of(Simplex s) const noexcept {
  if (s == 0) return BitVector::npos;
  auto layer = simplices(simplex_dim(s));
  auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) return BitVector::npos;
  return static_cast<std::size_t>(it - layer.begin());
}

std::int64_t SimplicialComplex::euler_characteristic() const noexcept {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(by_dim_[d].size());
  return chi;
}

std::vector<std::uint64_t> SimplicialComplex::adjacency() const {
  std::vector<std::uint64_t> adj(vertex_count_, 0);
  for (Simplex e : simplices(1)) {
    const auto a = static_cast<std::size_t>(std::countr_zero(e));
    const auto b = static_cast<std::size_t>(63 - std::countl_zero(e));
    adj[a] |= Simplex{1} << b;
    adj[b] |= Simplex{1} << a;
  }
  return adj;
}

bool SimplicialComplex::is_connected() const {
  if (vertex_mask_ == 0) return false;
  const auto adj = adjacency();
  Simplex seen = vertex_mask_ & (~vertex_mask_ + 1);
  Simplex frontier = seen;
  while (frontier != 0) {
    Simplex next = 0;
    for (Simplex f = frontier; f != 0; f &= f - 1)
      next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == vertex_mask_;
}

BitMatrix SimplicialComplex::boundary_matrix(int d) const {
  const auto rows = simplices(d);
  const auto cols = simplices(d - 1);
  BitMatrix m(rows.size(), cols.size());
  if (d <= 0) return m;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (Simplex rest = rows[r]; rest != 0; rest &= rest - 1) {
      const Simplex face = rows[r] & ~(rest & (~rest + 1));
      m.set(r, index_of(face));
    }
  return m;
}

// --------------------------------------------------------- local structure

namespace {

void check_vertex(const SimplicialComplex& x, std::size_t v) {
  if (v >= x.vertex_count())
    fail(ErrorKind::invalid_argument,
         "vertex " + std::to_string(v) + " out of range for m = " + std::to_string(x.vertex_count()));
}

}  // namespace

std::vector<Simplex> star(const SimplicialComplex& x, std::size_t v) {
  check_vertex(x, v);
  std::vector<Simplex> out;
  for (Simplex s : x.simplices())
    if (simplex_contains(s, v)) out.push_back(s);
  return out;
}

SimplicialComplex closed_star(const SimplicialComplex& x, std::size_t v) {
  const auto st = star(x, v);
  return SimplicialComplex::subcomplex(x.vertex_count(), st);
}

SimplicialComplex link(const SimplicialComplex& x, std::size_t v) {
  check_vertex(x, v);
  const Simplex bit = Simplex{1} << v;
  std::vector<Simplex> gens;
  for (Simplex s : x.simplices())
    if ((s & bit) != 0 && s != bit) gens.push_back(s & ~bit);
  return SimplicialComplex::subcomplex(x.vertex_count(), gens);
}

SimplicialComplex delete_star(const SimplicialComplex& x, std::size_t v) {
  check_vertex(x, v);
  if (x.vertex_count() < 2) fail(ErrorKind::invalid_argument, "delete_star needs at least two vertices");
  const Simplex low = (Simplex{1} << v) - 1;
  std::vector<Simplex> gens;
  for (Simplex s : x.simplices())
    if (!simplex_contains(s, v)) gens.push_back((s & low) | ((s >> 1) & ~low));
  if (gens.empty()) fail(ErrorKind::invalid_argument, "delete_star leaves the void complex");
  return SimplicialComplex::subcomplex(x.vertex_count() - 1, gens);
}

SimplicialComplex relabel(const SimplicialComplex& x, std::span<const std::size_t> perm) {
  const std::size_t m = x.vertex_count();
  if (perm.size() != m) fail(ErrorKind::dimension_mismatch, "relabel: permutation length mismatch");
  Simplex image = 0;
  for (auto p : perm) {
    if (p >= m) fail(ErrorKind::invalid_argument, "relabel: index out of range");
    image |= Simplex{1} << p;
  }
  if (image != universe_mask(m)) fail(ErrorKind::invalid_argument, "relabel: not a permutation");
  std::vector<Simplex> gens;
  for (Simplex s : x.simplices()) {
    Simplex t = 0;
    for (Simplex r = s; r != 0; r &= r - 1) t |= Simplex{1} << perm[static_cast<std::size_t>(std::countr_zero(r))];
    gens.push_back(t);
  }
  return SimplicialComplex::subcomplex(m, gens);
}

// ---------------------------------------------------------- constructions

SimplicialComplex barycentric_subdivision(const SimplicialComplex& x) {
  auto nodes = x.simplices();
  if (nodes.empty()) fail(ErrorKind::invalid_argument, "subdivision of the void complex");
  if (nodes.size() > kMaxVertices)
    fail(ErrorKind::resource_cap, "subdivision needs " + std::to_string(nodes.size()) + " vertices, limit is 64");
  std::sort(nodes.begin(), nodes.end(), lex_less);
  std::vector<Simplex> chains;
  std::vector<std::size_t> stack;
  // Extend chains upwards from each node; every prefix is itself a chain.
  auto extend = [&](auto&& self, std::size_t top, Simplex chain) -> void {
    chains.push_back(chain);
    for (std::size_t j = top + 1; j < nodes.size(); ++j)
      if (nodes[j] != nodes[top] && (nodes[top] & nodes[j]) == nodes[top])
        self(self, j, chain | (Simplex{1} << j));
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) extend(extend, i, Simplex{1} << i);
  return SimplicialComplex::subcomplex(nodes.size(), chains);
}

SimplicialComplex cone(const SimplicialComplex& x) {
  const std::size_t m = x.vertex_count();
  if (m + 1 > kMaxVertices) fail(ErrorKind::resource_cap, "cone exceeds 64 vertices");
  const Simplex apex = Simplex{1} << m;
  std::vector<Simplex> gens{apex};
  for (Simplex s : x.simplices()) gens.push_back(s | apex);
  return SimplicialComplex::subcomplex(m + 1, gens);
}

SimplicialComplex suspension(const SimplicialComplex& x) {
  const std::size_t m = x.vertex_count();
  if (m + 2 > kMaxVertices) fail(ErrorKind::resource_cap, "suspension exceeds 64 vertices");
  const Simplex north = Simplex{1} << m;
  const Simplex south = Simplex{1} << (m + 1);
  std::vector<Simplex> gens{north, south};
  for (Simplex s : x.simplices()) {
    gens.push_back(s | north);
    gens.push_back(s | south);
  }
  return SimplicialComplex::subcomplex(m + 2, gens);
}

std::size_t diameter(const SimplicialComplex& x) {
  if (!x.is_connected()) fail(ErrorKind::invalid_argument, "diameter of a disconnected complex");
  const auto adj = x.adjacency();
  std::size_t best = 0;
  for (Simplex start = x.vertex_mask(); start != 0; start &= start - 1) {
    Simplex seen = start & (~start + 1);
    Simplex frontier = seen;
    std::size_t depth = 0;
    while (true) {
      Simplex next = 0;
      for (Simplex f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      if (frontier == 0) break;
      seen |= frontier;
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

// --------------------------------------------------------------- homology

std::vector<std::size_t> homology_ranks(const SimplicialComplex& x) {
  std::vector<std::size_t> ranks;
  std::size_t rank_in = 0;
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(x.dim() + 2), 0);
  for (int d = 1; d <= x.dim(); ++d) boundary_rank[static_cast<std::size_t>(d)] = rank(x.boundary_matrix(d));
  for (int d = 0; d <= x.dim(); ++d) {
    rank_in = boundary_rank[static_cast<std::size_t>(d + 1)];
    ranks.push_back(x.simplices(d).size() - boundary_rank[static_cast<std::size_t>(d)] - rank_in);
  }
  return ranks;
}

std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& x) {
  std::map<int, std::size_t> out;
  if (x.is_void()) {
    out[-1] = 1;
    return out;
  }
  const auto ranks = homology_ranks(x);
  for (std::size_t d = 0; d < ranks.size(); ++d) {
    const std::size_t r = d == 0 ? ranks[0] - 1 : ranks[d];
    if (r != 0) out[static_cast<int>(d)] = r;
  }
  return out;
}

// -------------------------------------------------------- standard families

SimplicialComplex simplex_complex(std::size_t n) {
  const Simplex all = universe_mask(n + 1);
  return SimplicialComplex::from_facet_masks(n + 1, std::span<const Simplex>(&all, 1));
}

SimplicialComplex simplex_boundary(std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_argument, "the boundary of a point is void");
  const Simplex all = universe_mask(n + 1);
  std::vector<Simplex> facets;
  for (std::size_t v = 0; v <= n; ++v) facets.push_back(all & ~(Simplex{1} << v));
  return SimplicialComplex::from_facet_masks(n + 1, facets);
}

SimplicialComplex loop_complex(std::size_t m) {
  if (m < 3) fail(ErrorKind::invalid_argument, "a loop needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back(make_simplex({i, (i + 1) % m}));
  return SimplicialComplex::from_facet_masks(m, edges);
}

SimplicialComplex path_complex(std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_argument, "a path needs at least one edge");
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(make_simplex({i, i + 1}));
  return SimplicialComplex::from_facet_masks(n + 1, edges);
}

SimplicialComplex grid_complex(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || rows * cols > kMaxVertices)
    fail(ErrorKind::invalid_argument, "grid dimensions out of range");
  std::vector<Simplex> edges;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      if (c + 1 < cols) edges.push_back(make_simplex({v, v + 1}));
      if (r + 1 < rows) edges.push_back(make_simplex({v, v + cols}));
    }
  return SimplicialComplex::from_facet_masks(rows * cols, edges);
}

SimplicialComplex cube_complex(std::size_t n) {
  if (n == 0 || n > 6) fail(ErrorKind::invalid_argument, "cube dimension must be in [1, 6]");
  const std::size_t m = std::size_t{1} << n;
  std::vector<Simplex> edges;
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) edges.push_back(make_simplex({v, w}));
    }
  return SimplicialComplex::from_facet_masks(m, edges);
}

SimplicialComplex complete_graph_complex(std::size_t m) {
  std::vector<Simplex> edges;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) edges.push_back(make_simplex({a, b}));
  return SimplicialComplex::from_facet_masks(m, edges);
}

SimplicialComplex complete_bipartite_complex(std::size_t a, std::size_t b) {
  std::vector<Simplex> edges;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t w = 0; w < b; ++w) edges.push_back(make_simplex({u, a + w}));
  return SimplicialComplex::from_facet_masks(a + b, edges);
}

SimplicialComplex torus_min() {
  std::vector<Simplex> tris;
  for (std::size_t i = 0; i < 7; ++i) {
    tris.push_back(make_simplex({i, (i + 1) % 7, (i + 3) % 7}));
    tris.push_back(make_simplex({i, (i + 2) % 7, (i + 3) % 7}));
  }
  return SimplicialComplex::from_facet_masks(7, tris);
}

SimplicialComplex rp2_min() {
  const std::vector<std::vector<std::size_t>> tris = {
      {0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
      {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
  return SimplicialComplex::from_facets(6, tris);
}

SimplicialComplex icosahedron() {
  // 0 and 11 are the poles, 1..5 and 6..10 the upper and lower rings.
  std::vector<Simplex> tris;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t u = 1 + i, u2 = 1 + (i + 1) % 5;
    const std::size_t l = 6 + i, l2 = 6 + (i + 1) % 5;
    tris.push_back(make_simplex({0, u, u2}));
    tris.push_back(make_simplex({11, l, l2}));
    tris.push_back(make_simplex({u, u2, l}));
    tris.push_back(make_simplex({u2, l, l2}));
  }
  return SimplicialComplex::from_facet_masks(12, tris);
}

SimplicialComplex standard_complex(std::string_view name, std::span<const std::size_t> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      fail(ErrorKind::invalid_argument,
           std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
  };
  if (name == "simplex") return need(1), simplex_complex(params[0]);
  if (name == "boundary") return need(1), simplex_boundary(params[0]);
  if (name == "loop") return need(1), loop_complex(params[0]);
  if (name == "path") return need(1), path_complex(params[0]);
  if (name == "grid") return need(2), grid_complex(params[0], params[1]);
  if (name == "cube") return need(1), cube_complex(params[0]);
  if (name == "complete") return need(1), complete_graph_complex(params[0]);
  if (name == "bipartite") return need(2), complete_bipartite_complex(params[0], params[1]);
  if (name == "torus_min") return need(0), torus_min();
  if (name == "rp2_min") return need(0), rp2_min();
  if (name == "icosahedron") return need(0), icosahedron();
  fail(ErrorKind::invalid_argument, "unknown complex family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- text I/O

namespace {

std::vector<std::size_t> parse_indices(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == ',')) ++p;
    if (p == end) break;
    std::size_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{})
      fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected a vertex index");
    out.push_back(value);
    p = next;
  }
  return out;
}

}  // namespace

SimplicialComplex parse_facet_text(std::string_view text) {
  std::optional<std::size_t> m;
  std::vector<std::vector<std::size_t>> facets;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto values = parse_indices(line, line_no);
    if (values.empty()) continue;
    if (!m) {
      if (values.size() != 1)
        fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected the vertex count");
      m = values[0];
      if (*m == 0 || *m > kMaxVertices)
        fail(ErrorKind::parse, "vertex count must be in [1, 64]");
      continue;
    }
    for (auto v : values)
      if (v >= *m)
        fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                                   " out of range");
    facets.push_back(std::move(values));
  }
  if (!m) fail(ErrorKind::parse, "missing vertex count");
  return SimplicialComplex::from_facets(*m, facets);
}

std::string to_facet_text(const SimplicialComplex& x) {
  std::ostringstream out;
  out << x.vertex_count() << '\n';
  for (Simplex f : x.facets()) {
    bool first = true;
    for (auto v : simplex_vertices(f)) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace uberhom
