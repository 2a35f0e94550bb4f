#include "uberhom/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>

#include "uberhom/error.hpp"
#include "uberhom/parallel.hpp"
#include "uberhom/uber.hpp"

namespace uberhom {

namespace {

std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

std::size_t lowest_vertex(std::uint64_t mask) { return static_cast<std::size_t>(std::countr_zero(mask)); }

}  // namespace

SimpleGraph::SimpleGraph(std::size_t vertex_count) {
  if (vertex_count > kMaxVertices)
    fail(ErrorKind::resource_cap, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  adjacency_.assign(vertex_count, 0);
}

SimpleGraph SimpleGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  SimpleGraph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto a : adjacency_) twice += static_cast<std::size_t>(std::popcount(a));
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::uint64_t w = adjacency_[u] & ~((bit(u) << 1) - 1); w != 0; w &= w - 1)
      out.emplace_back(u, lowest_vertex(w));
  return out;
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const noexcept {
  return u < vertex_count() && v < vertex_count() && ((adjacency_[u] >> v) & 1u);
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count())
    fail(ErrorKind::invalid_argument, "edge endpoint out of range");
  if (u == v) fail(ErrorKind::invalid_argument, "loops are not allowed in a simple graph");
  if (has_edge(u, v)) fail(ErrorKind::invalid_argument, "repeated edge in a simple graph");
  adjacency_[u] |= bit(v);
  adjacency_[v] |= bit(u);
}

std::size_t SimpleGraph::degree(std::size_t v) const noexcept {
  return static_cast<std::size_t>(std::popcount(adjacency_[v]));
}

bool SimpleGraph::is_connected() const {
  if (vertex_count() == 0) return false;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adjacency_[lowest_vertex(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return static_cast<std::size_t>(std::popcount(seen)) == vertex_count();
}

std::vector<std::size_t> SimpleGraph::degree_sequence() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count(); ++v) out.push_back(degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::optional<std::size_t> SimpleGraph::girth() const {
  std::optional<std::size_t> best;
  const std::size_t n = vertex_count();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, SIZE_MAX), parent(n, SIZE_MAX);
    std::queue<std::size_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (std::uint64_t w = adjacency_[u]; w != 0; w &= w - 1) {
        const auto x = lowest_vertex(w);
        if (dist[x] == SIZE_MAX) {
          dist[x] = dist[u] + 1;
          parent[x] = u;
          q.push(x);
        } else if (parent[u] != x) {
          const std::size_t len = dist[u] + dist[x] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

bool SimpleGraph::is_vertex_cover(std::uint64_t vertices) const noexcept {
  for (std::size_t u = 0; u < vertex_count(); ++u)
    if (((vertices >> u) & 1u) == 0 && (adjacency_[u] & ~vertices) != 0) return false;
  return true;
}

namespace {

// Smallest cover of the edges of `adj` restricted to `alive`, at most `budget`.
std::size_t cover_search(const std::vector<std::uint64_t>& adj, std::uint64_t alive, std::size_t budget) {
  for (std::uint64_t a = alive; a != 0; a &= a - 1) {
    const auto u = lowest_vertex(a);
    const std::uint64_t nb = adj[u] & alive;
    if (nb == 0) continue;
    if (budget == 0) return SIZE_MAX;
    // Either u is in the cover, or all of its neighbours are.
    std::size_t best = cover_search(adj, alive & ~bit(u), budget - 1);
    if (best != SIZE_MAX) best += 1;
    const auto k = static_cast<std::size_t>(std::popcount(nb));
    const std::size_t limit = best == SIZE_MAX ? budget : std::min(budget, best - 1);
    if (k <= limit) {
      const std::size_t other = cover_search(adj, alive & ~nb, limit - k);
      if (other != SIZE_MAX) best = std::min(best, other + k);
    }
    return best;
  }
  return 0;
}

}  // namespace

std::size_t SimpleGraph::vertex_cover_number() const {
  const std::uint64_t all = vertex_count() == 64 ? ~std::uint64_t{0} : bit(vertex_count()) - 1;
  return cover_search(adjacency_, all, vertex_count());
}

SimpleGraph SimpleGraph::relabel(std::span<const std::size_t> perm) const {
  if (perm.size() != vertex_count()) fail(ErrorKind::dimension_mismatch, "permutation length differs from the vertex count");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) fail(ErrorKind::invalid_argument, "not a permutation");
    seen[p] = true;
  }
  SimpleGraph out(vertex_count());
  for (const auto& [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

// ------------------------------------------------------------------ graph6

SimpleGraph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) fail(ErrorKind::parse, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) fail(ErrorKind::parse, "invalid graph6 character");
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) fail(ErrorKind::parse, "graph6 order out of range");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) fail(ErrorKind::resource_cap, "graph6 order above " + std::to_string(kMaxVertices));
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) fail(ErrorKind::parse, "graph6 string has the wrong length");
  SimpleGraph g(n);
  std::size_t k = 0;
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const auto byte = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1u) g.add_edge(u, v);
    }
  for (; k < bytes * 6; ++k)
    if ((static_cast<unsigned>(text[pos + k / 6] - 63) >> (5 - k % 6)) & 1u)
      fail(ErrorKind::parse, "graph6 padding bits must be zero");
  return g;
}

std::string to_graph6(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  unsigned acc = 0;
  std::size_t k = 0;
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1u : 0u);
      if (++k % 6 == 0) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
      }
    }
  if (k % 6 != 0) out.push_back(static_cast<char>(63 + (acc << (6 - k % 6))));
  return out;
}

std::vector<SimpleGraph> parse_graph6_lines(std::string_view text) {
  std::vector<SimpleGraph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    auto line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_graph6(line));
    start = end + 1;
  }
  return out;
}

namespace {

SimplicialComplex complex_of(const SimpleGraph& g) {
  std::vector<Simplex> facets;
  for (const auto& [u, v] : g.edges()) facets.push_back(bit(u) | bit(v));
  return SimplicialComplex::from_facet_masks(g.vertex_count(), facets);
}

}  // namespace

SimplicialComplex graph_as_complex(const SimpleGraph& g) {
  if (!g.is_connected()) fail(ErrorKind::invalid_argument, "graph is not connected");
  return complex_of(g);
}

// ---------------------------------------------------------------- families

SimpleGraph complete_graph(std::size_t m) {
  SimpleGraph g(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph cycle_graph(std::size_t m) {
  if (m < 3) fail(ErrorKind::invalid_argument, "a cycle needs at least 3 vertices");
  SimpleGraph g(m);
  for (std::size_t v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n + 1);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
  SimpleGraph g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

SimpleGraph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || rows * cols > kMaxVertices) fail(ErrorKind::invalid_argument, "grid dimensions out of range");
  SimpleGraph g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  return g;
}

SimpleGraph cube_graph(std::size_t n) {
  if (n == 0 || n > 6) fail(ErrorKind::invalid_argument, "cube dimension must be in [1, 6]");
  SimpleGraph g(std::size_t{1} << n);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (std::size_t b = 0; b < n; ++b)
      if (const std::size_t w = v ^ (std::size_t{1} << b); v < w) g.add_edge(v, w);
  return g;
}

SimpleGraph prism_graph() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  return SimpleGraph::from_edges(6, edges);
}

SimpleGraph standard_graph(std::string_view name, std::span<const std::size_t> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      fail(ErrorKind::invalid_argument, std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "complete") return need(1), complete_graph(params[0]);
  if (name == "cycle") return need(1), cycle_graph(params[0]);
  if (name == "path") return need(1), path_graph(params[0]);
  if (name == "bipartite") return need(2), complete_bipartite_graph(params[0], params[1]);
  if (name == "grid") return need(2), grid_graph(params[0], params[1]);
  if (name == "cube") return need(1), cube_graph(params[0]);
  if (name == "prism") return need(0), prism_graph();
  fail(ErrorKind::invalid_argument, "unknown graph family: " + std::string(name));
}

// ------------------------------------------------------------------- Θ

namespace {

// Components and edges of the subgraph induced on `black`.
std::pair<std::size_t, std::size_t> black_components_and_edges(const SimpleGraph& g, std::uint64_t black) {
  std::size_t components = 0, edges = 0;
  std::uint64_t unseen = black;
  while (unseen != 0) {
    ++components;
    std::uint64_t frontier = unseen & (~unseen + 1);
    unseen &= ~frontier;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.neighbours(lowest_vertex(f));
      frontier = next & unseen;
      unseen &= ~frontier;
    }
  }
  for (std::uint64_t b = black; b != 0; b &= b - 1)
    edges += static_cast<std::size_t>(std::popcount(g.neighbours(lowest_vertex(b)) & black));
  return {components, edges / 2};
}

}  // namespace

BigradedRanks graph_horizontal_homology(const SimpleGraph& g, const Colouring& colouring) {
  if (colouring.length() != g.vertex_count())
    fail(ErrorKind::dimension_mismatch, "colouring length differs from the vertex count");
  const std::uint64_t black = colouring.black_mask();
  BigradedRanks out;
  const auto [components, black_edges] = black_components_and_edges(g, black);
  if (components != 0) out[{0, 0}] = components;
  if (const std::size_t cycles = black_edges + components - static_cast<std::size_t>(std::popcount(black)); cycles != 0)
    out[{1, 0}] = cycles;
  std::size_t isolated_white = 0, mixed = 0, white_edges = 0;
  for (std::uint64_t w = colouring.white_mask(); w != 0; w &= w - 1) {
    const auto v = lowest_vertex(w);
    const auto bdeg = static_cast<std::size_t>(std::popcount(g.neighbours(v) & black));
    if (bdeg == 0)
      ++isolated_white;
    else
      mixed += bdeg - 1;
    white_edges += static_cast<std::size_t>(std::popcount(g.neighbours(v) & colouring.white_mask()));
  }
  if (isolated_white != 0) out[{0, 1}] = isolated_white;
  if (mixed != 0) out[{1, 1}] = mixed;
  if (white_edges != 0) out[{1, 2}] = white_edges / 2;
  return out;
}

ThetaLevel theta(const SimpleGraph& g, int j, ThetaMode mode, std::size_t jobs) {
  const std::size_t m = g.vertex_count();
  if (j < 0 || static_cast<std::size_t>(j) > m) fail(ErrorKind::invalid_argument, "theta level out of range");
  const auto colourings = colourings_of_norm(m, static_cast<std::size_t>(j));
  std::vector<BigradedRanks> ranks(colourings.size());
  if (j <= 1) {
    for (std::size_t a = 0; a < colourings.size(); ++a) ranks[a] = graph_horizontal_homology(g, colourings[a]);
  } else {
    const auto x = complex_of(g);
    parallel_for(colourings.size(), jobs == 0 ? default_jobs() : jobs,
                 [&](std::size_t a) { ranks[a] = horizontal_homology(x, colourings[a]); });
  }
  ThetaLevel level;
  level.j = j;
  if (mode == ThetaMode::aggregated) {
    BigradedRanks total;
    for (const auto& r : ranks)
      for (const auto& [grading, value] : r) total[grading] += value;
    for (const auto& [grading, value] : total) level.tuples.push_back({j, grading.first, grading.second, value});
  } else {
    for (const auto& r : ranks)
      for (const auto& [grading, value] : r) level.tuples.push_back({j, grading.first, grading.second, value});
  }
  std::sort(level.tuples.rbegin(), level.tuples.rend());
  return level;
}

std::string Dissimilarity::to_string() const {
  if (infinite) return "inf";
  if (numerator == 0) return "0";
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

Dissimilarity dissimilarity_at(std::size_t m, int first_level) {
  if (m == 0 || first_level < 0 || static_cast<std::size_t>(first_level) > m)
    fail(ErrorKind::invalid_argument, "dissimilarity level out of range");
  Dissimilarity d;
  d.first_level = first_level;
  const std::size_t num = m - static_cast<std::size_t>(first_level);
  const std::size_t g = std::gcd(num, m);
  d.numerator = num / g;
  d.denominator = m / g;
  return d;
}

Dissimilarity dissimilarity(const SimpleGraph& a, const SimpleGraph& b, ThetaMode mode, std::size_t jobs) {
  Dissimilarity d;
  if (a.vertex_count() != b.vertex_count()) {
    d.infinite = true;
    return d;
  }
  const std::size_t m = a.vertex_count();
  if (m == 0) fail(ErrorKind::invalid_argument, "dissimilarity of empty graphs");
  for (std::size_t j = 0; j <= m; ++j)
    if (theta(a, static_cast<int>(j), mode, jobs) != theta(b, static_cast<int>(j), mode, jobs))
      return dissimilarity_at(m, static_cast<int>(j));
  d.theta_equivalent = true;
  return d;
}

std::strong_ordering compare(const Dissimilarity& a, const Dissimilarity& b) {
  if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
  return a.numerator * b.denominator <=> b.numerator * a.denominator;
}

bool bounded_by_sum(const Dissimilarity& c, const Dissimilarity& a, const Dissimilarity& b) {
  if (a.infinite || b.infinite) return true;
  if (c.infinite) return false;
  return c.numerator * a.denominator * b.denominator <=
         (a.numerator * b.denominator + b.numerator * a.denominator) * c.denominator;
}

DeltaBounds delta_lower_bounds(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count()) fail(ErrorKind::dimension_mismatch, "bounds need equal vertex counts");
  const std::size_t m = a.vertex_count();
  DeltaBounds out;
  if (a.degree_sequence() != b.degree_sequence()) out.degree_sequence = dissimilarity_at(m, 1);
  const auto ga = a.girth(), gb = b.girth();
  if (ga != gb) {
    const std::size_t smaller = !ga ? *gb : !gb ? *ga : std::min(*ga, *gb);
    out.girth = dissimilarity_at(m, static_cast<int>(smaller));
  }
  const auto va = a.vertex_cover_number(), vb = b.vertex_cover_number();
  if (va != vb) out.vertex_cover = dissimilarity_at(m, static_cast<int>(std::min(va, vb)));
  return out;
}

bool vertex_cover_bijection_check(const SimpleGraph& g) {
  const std::size_t m = g.vertex_count();
  if (m == 0 || m > 16) fail(ErrorKind::invalid_argument, "vertex cover check needs 1 to 16 vertices");
  const auto x = complex_of(g);
  for (std::uint64_t mask = 0; mask < bit(m); ++mask) {
    const auto h = horizontal_homology(x, Colouring(m, mask));
    const bool vanishes = std::none_of(h.begin(), h.end(), [](const auto& p) { return p.first.second == 2; });
    if (vanishes != g.is_vertex_cover(mask)) return false;
  }
  return true;
}

// ---------------------------------------------------------- spacious trees

namespace {

std::uint64_t vertices_of(const std::vector<Edge>& tree) {
  std::uint64_t out = 0;
  for (const auto& [u, v] : tree) out |= bit(u) | bit(v);
  return out;
}

bool spacious(const SimpleGraph& g, const std::vector<Edge>& tree) {
  for (std::size_t a = 0; a < tree.size(); ++a)
    for (std::size_t b = a + 1; b < tree.size(); ++b) {
      // Two tree edges sharing a vertex lie in a triangle iff their far ends
      // are adjacent.
      const auto [p, q] = tree[a];
      const auto [r, s] = tree[b];
      std::size_t x = SIZE_MAX, y = SIZE_MAX;
      if (p == r) x = q, y = s;
      else if (p == s) x = q, y = r;
      else if (q == r) x = p, y = s;
      else if (q == s) x = p, y = r;
      if (x != SIZE_MAX && g.has_edge(x, y)) return false;
    }
  return true;
}

// Every tree with at least one edge, grown from its smallest vertex by
// adding edges to new vertices with larger labels.
void grow_trees(const SimpleGraph& g, std::size_t root, std::vector<Edge>& tree, std::uint64_t in_tree,
                std::vector<Edge> frontier, std::size_t from, std::vector<std::vector<Edge>>& out) {
  for (std::size_t f = from; f < frontier.size(); ++f) {
    const auto [u, v] = frontier[f];
    if ((in_tree >> v) & 1u) continue;
    tree.emplace_back(std::min(u, v), std::max(u, v));
    std::vector<Edge> next(frontier.begin() + static_cast<std::ptrdiff_t>(f) + 1, frontier.end());
    for (std::uint64_t w = g.neighbours(v) & ~(in_tree | bit(v)); w != 0; w &= w - 1)
      if (lowest_vertex(w) > root) next.emplace_back(v, lowest_vertex(w));
    if (spacious(g, tree)) {
      out.push_back(tree);
      grow_trees(g, root, tree, in_tree | bit(v), next, 0, out);
    }
    tree.pop_back();
  }
}

bool is_subtree(const std::vector<Edge>& small, std::uint64_t small_vertices, const std::vector<Edge>& big,
                std::uint64_t big_vertices) {
  if ((small_vertices & ~big_vertices) != 0) return false;
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SpaciousTreeReport spacious_trees(const SimpleGraph& g) {
  const std::size_t m = g.vertex_count();
  if (m == 0 || m > 16) fail(ErrorKind::invalid_argument, "spacious tree search needs 1 to 16 vertices");
  SpaciousTreeReport report;
  for (std::uint64_t mask = 1; mask < bit(m); ++mask) {
    const auto [components, edges] = black_components_and_edges(g, mask);
    if (components == 1 && edges + 1 == static_cast<std::size_t>(std::popcount(mask)))
      report.colourings.emplace_back(m, mask);
  }

  std::vector<std::uint64_t> vertex_sets;
  for (std::size_t v = 0; v < m; ++v) {
    report.trees.push_back({});
    vertex_sets.push_back(bit(v));
  }
  // Trees rooted at their smallest vertex are found exactly once, but the
  // growth order can repeat an edge set; deduplicate.
  std::set<std::vector<Edge>> seen;
  for (std::size_t root = 0; root < m; ++root) {
    std::vector<Edge> frontier;
    for (std::uint64_t w = g.neighbours(root); w != 0; w &= w - 1)
      if (lowest_vertex(w) > root) frontier.emplace_back(root, lowest_vertex(w));
    std::vector<std::vector<Edge>> found;
    std::vector<Edge> tree;
    grow_trees(g, root, tree, bit(root), frontier, 0, found);
    for (auto& t : found) {
      std::sort(t.begin(), t.end());
      if (seen.insert(t).second) {
        vertex_sets.push_back(vertices_of(t));
        report.trees.push_back(t);
      }
    }
  }

  for (std::size_t a = 0; a < report.trees.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < report.trees.size() && maximal; ++b)
      if (b != a && report.trees[b].size() > report.trees[a].size() &&
          is_subtree(report.trees[a], vertex_sets[a], report.trees[b], vertex_sets[b]))
        maximal = false;
    if (maximal) report.maximal_trees.push_back(report.trees[a]);
  }

  std::vector<std::uint64_t> tree_masks = vertex_sets;
  std::sort(tree_masks.begin(), tree_masks.end());
  std::vector<std::uint64_t> colour_masks;
  for (const auto& c : report.colourings) colour_masks.push_back(c.black_mask());
  report.bijective = tree_masks == colour_masks;
  return report;
}

// ------------------------------------------------------- graph homologies

GradedRanks h0_graph(const SimpleGraph& g, std::size_t jobs) {
  const std::size_t m = g.vertex_count();
  if (!g.is_connected()) fail(ErrorKind::invalid_argument, "graph is not connected");
  if (m > cube_cap_from_env())
    fail(ErrorKind::resource_cap, "graph has " + std::to_string(m) + " vertices, above the cube cap");
  if (jobs == 0) jobs = default_jobs();

  // Components of each black subgraph as vertex masks, sorted.
  auto components = [&](std::uint64_t black) {
    std::vector<std::uint64_t> out;
    std::uint64_t unseen = black;
    while (unseen != 0) {
      std::uint64_t comp = unseen & (~unseen + 1), frontier = comp;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.neighbours(lowest_vertex(f));
        frontier = next & black & ~comp;
        comp |= frontier;
      }
      out.push_back(comp);
      unseen &= ~comp;
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  struct Level {
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<std::uint64_t>> comps;
    std::vector<std::size_t> offset;
    std::map<std::uint64_t, std::size_t> index;
  };
  auto build = [&](std::size_t j) {
    Level level;
    for (const auto& c : colourings_of_norm(m, j)) level.masks.push_back(c.black_mask());
    level.comps.resize(level.masks.size());
    parallel_for(level.masks.size(), jobs, [&](std::size_t a) { level.comps[a] = components(level.masks[a]); });
    level.offset.assign(level.masks.size() + 1, 0);
    for (std::size_t a = 0; a < level.masks.size(); ++a) {
      level.offset[a + 1] = level.offset[a] + level.comps[a].size();
      level.index[level.masks[a]] = a;
    }
    return level;
  };

  std::vector<std::size_t> totals, ranks;
  Level current = build(0);
  for (std::size_t j = 0;; ++j) {
    totals.push_back(current.offset.back());
    if (j == m) break;
    Level next = build(j + 1);
    BitMatrix d(current.offset.back(), next.offset.back());
    parallel_for(current.masks.size(), jobs, [&](std::size_t a) {
      const std::uint64_t black = current.masks[a];
      for (std::uint64_t w = ~black & (m == 64 ? ~std::uint64_t{0} : bit(m) - 1); w != 0; w &= w - 1) {
        const std::size_t b = next.index.at(black | (w & (~w + 1)));
        const auto& targets = next.comps[b];
        for (std::size_t c = 0; c < current.comps[a].size(); ++c) {
          const auto it = std::find_if(targets.begin(), targets.end(),
                                       [&](std::uint64_t t) { return (t & current.comps[a][c]) != 0; });
          d.flip(current.offset[a] + c, next.offset[b] + static_cast<std::size_t>(it - targets.begin()));
        }
      }
    });
    ranks.push_back(rank(d));
    current = std::move(next);
  }
  GradedRanks out;
  for (std::size_t j = 0; j <= m; ++j) {
    std::size_t value = totals[j];
    if (j < m) value -= ranks[j];
    if (j > 0) value -= ranks[j - 1];
    if (value != 0) out[static_cast<int>(j)] = value;
  }
  return out;
}

namespace {

GradedRanks uber_at(const SimpleGraph& g, Bigrading grading, std::size_t jobs) {
  UberOptions options;
  options.jobs = jobs;
  options.bigradings = {grading};
  const auto x = graph_as_complex(g);
  GradedRanks out;
  if (grading.first > x.dim()) return out;
  for (const auto& [t, r] : uber_homology(x, options))
    if (r != 0) out[std::get<0>(t)] = r;
  return out;
}

}  // namespace

GradedRanks h1_0(const SimpleGraph& g, std::size_t jobs) { return uber_at(g, {0, 1}, jobs); }
GradedRanks h1_1(const SimpleGraph& g, std::size_t jobs) { return uber_at(g, {1, 1}, jobs); }
GradedRanks h2_graph(const SimpleGraph& g, std::size_t jobs) { return uber_at(g, {1, 2}, jobs); }

SimplicialComplex matching_complex(std::span<const Edge> edges) {
  const std::size_t n = edges.size();
  if (n == 0) fail(ErrorKind::invalid_argument, "matching complex of a graph without edges");
  if (n > kMaxVertices)
    fail(ErrorKind::resource_cap, "matching complex limited to " + std::to_string(kMaxVertices) + " edges");
  std::vector<std::uint64_t> clash(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto [p, q] = edges[a];
      const auto [r, s] = edges[b];
      if (p == r || p == s || q == r || q == s) clash[a] |= bit(b);
    }
  // Maximal matchings: extend by the smallest available edge, and keep a set
  // only when no skipped edge could still be added.
  std::vector<Simplex> facets;
  auto extend = [&](auto&& self, std::uint64_t chosen, std::uint64_t available, std::uint64_t skipped) -> void {
    if (available == 0) {
      bool maximal = true;
      for (std::uint64_t s = skipped; s != 0 && maximal; s &= s - 1)
        maximal = (clash[lowest_vertex(s)] & chosen) != 0;
      if (maximal) facets.push_back(chosen);
      return;
    }
    const auto e = lowest_vertex(available);
    self(self, chosen | bit(e), available & ~clash[e], skipped);
    self(self, chosen, available & ~bit(e), skipped | bit(e));
  };
  extend(extend, 0, n == 64 ? ~std::uint64_t{0} : bit(n) - 1, 0);
  return SimplicialComplex::from_facet_masks(n, facets);
}

SimplicialComplex matching_complex(const SimpleGraph& g) {
  const auto e = g.edges();
  return matching_complex(std::span<const Edge>(e));
}

}  // namespace uberhom
