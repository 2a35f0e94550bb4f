// Acceptance run: one PASS/FAIL line per criterion, with notes on the lines
// below. Exits nonzero if any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/enumerate.hpp"
#include "support/suite.hpp"
#include "uberhom/coloured.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/graph.hpp"
#include "uberhom/morse.hpp"
#include "uberhom/plane.hpp"
#include "uberhom/uber.hpp"

using namespace uberhom;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (notes.size() < 12) notes.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string show(const BigradedRanks& r) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [g, n] : r) {
    if (n == 0) continue;
    out << (first ? "" : ", ") << '(' << g.first << ',' << g.second << "):" << n;
    first = false;
  }
  return out.str() + '}';
}

std::string show(const GradedRanks& r) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [d, n] : r) {
    out << (first ? "" : ", ") << d << ':' << n;
    first = false;
  }
  return out.str() + '}';
}

std::string show(const std::vector<ThetaTuple>& tuples) {
  std::ostringstream out;
  out << '(';
  for (std::size_t t = 0; t < tuples.size(); ++t)
    out << (t ? "," : "") << '(' << tuples[t].j << ',' << tuples[t].i << ',' << tuples[t].k << ',' << tuples[t].r
        << ')';
  return out.str() + ')';
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigradedRanks nonzero(BigradedRanks r) {
  std::erase_if(r, [](const auto& p) { return p.second == 0; });
  return r;
}

PlaneGraph star_plane(std::size_t leaves) {
  std::vector<std::vector<std::size_t>> rotation(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) {
    rotation[0].push_back(v);
    rotation[v] = {0};
  }
  return PlaneGraph::from_rotation(rotation);
}

// Repeatedly strip a vertex whose neighbourhood is a clique.
bool is_chordal(const SimpleGraph& g) {
  std::uint64_t alive = g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
  while (alive != 0) {
    bool stripped = false;
    for (std::size_t v = 0; v < g.vertex_count() && !stripped; ++v) {
      if (!((alive >> v) & 1u)) continue;
      const std::uint64_t nb = g.neighbours(v) & alive;
      bool clique = true;
      for (std::uint64_t rest = nb; rest != 0 && clique; rest &= rest - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(rest));
        clique = (nb & ~(std::uint64_t{1} << u) & ~g.neighbours(u)) == 0;
      }
      if (clique) {
        alive &= ~(std::uint64_t{1} << v);
        stripped = true;
      }
    }
    if (!stripped) return false;
  }
  return true;
}

UberOptions only_level(int j) {
  UberOptions o;
  o.first_level = o.last_level = j;
  return o;
}

// ------------------------------------------------------------ criteria

Outcome triangle_one_black() {
  Outcome o;
  const auto x = simplex_complex(2);
  const auto e = Colouring::parse("100");
  const auto h = horizontal_homology(x, e);
  const auto d = diagonal_homology(x, e);
  o.expect(nonzero(h) == BigradedRanks{{{0, 0}, 1}}, "H^h = " + show(h));
  o.expect(nonzero(d) == BigradedRanks{{{0, 1}, 1}}, "H^d = " + show(d));
  return o;
}

Outcome tetrahedron_alternating() {
  Outcome o;
  const auto h = horizontal_homology(simplex_complex(3), Colouring::parse("1010"));
  o.expect(nonzero(h) == BigradedRanks{{{0, 0}, 1}}, "H^h = " + show(h));
  return o;
}

Outcome extreme_colourings_and_square_zero() {
  Outcome o;
  const auto complexes = suite::bundled();
  std::size_t colourings = 0;
  for (const auto& [name, x] : complexes) {
    const std::size_t m = x.vertex_count();
    const auto h = homology_ranks(x);
    const auto black = horizontal_homology(x, Colouring::all_black(m));
    for (int i = 0; i <= x.dim(); ++i)
      o.expect(rank_at(black, i, 0) == h[static_cast<std::size_t>(i)], name + ": all-black rank at i=" + std::to_string(i));
    o.expect(trimmed(flatten(black)) == trimmed(h), name + ": all-black ranks off (0,k)");
    const auto white = horizontal_homology(x, Colouring::all_white(m));
    for (int i = 0; i <= x.dim(); ++i)
      o.expect(rank_at(white, i, i + 1) == x.simplices(i).size(), name + ": all-white rank at i=" + std::to_string(i));
    o.expect(flatten(white) == x.f_vector(), name + ": all-white ranks off (i,i+1)");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const ColouredComplex c(x, Colouring(m, mask));
      ++colourings;
      for (int i = 1; i <= x.dim(); ++i)
        for (int k = 0; k <= i + 1; ++k) {
          o.expect(c.horizontal(i, k).then(c.horizontal(i - 1, k)).is_zero(), name + ": horizontal square");
          if (k >= 1) o.expect(c.diagonal(i, k).then(c.diagonal(i - 1, k - 1)).is_zero(), name + ": diagonal square");
        }
    }
  }
  o.note(std::to_string(complexes.size()) + " complexes, " + std::to_string(colourings) + " colourings");
  return o;
}

Outcome dalmatian_equivalence() {
  Outcome o;
  std::size_t dalmatian = 0;
  for (const auto& [name, x] : suite::bundled()) {
    const std::size_t m = x.vertex_count();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      const Colouring e(m, mask);
      const auto report = verify_morse(x, e);
      const bool dal = is_dalmatian(x, e);
      o.expect(dal == report.is_morse(), name + " " + e.to_string() + ": dalmatian and Morse disagree");
      if (!dal) continue;
      ++dalmatian;
      const auto direct = horizontal_homology(x, e);
      o.expect(report.critical_counts() == trimmed(flatten(direct)), name + " " + e.to_string() + ": critical counts");
      o.expect(nonzero(dalmatian_closed_form(x, e).ranks) == nonzero(direct),
               name + " " + e.to_string() + ": closed form");
    }
  }
  o.note(std::to_string(dalmatian) + " dalmatian colourings");
  return o;
}

Outcome elementary_partition() {
  Outcome o;
  for (const auto& [name, x] : suite::bundled()) {
    const std::size_t m = x.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const Colouring e(m, mask);
      auto whole = induced_subgraph(x, e);
      std::vector<PosetEdge> joined;
      for (const auto& [v, edges] : elementary_decomposition(x, e)) {
        o.expect(e.is_black(v), name + ": part for a white vertex");
        o.expect(edges == induced_subgraph(x, Colouring::elementary(m, v)), name + ": part is not elementary");
        joined.insert(joined.end(), edges.begin(), edges.end());
      }
      std::sort(whole.begin(), whole.end());
      std::sort(joined.begin(), joined.end());
      o.expect(std::adjacent_find(joined.begin(), joined.end()) == joined.end(), name + ": parts overlap");
      o.expect(joined == whole, name + " " + e.to_string() + ": parts do not cover");
    }
  }
  const auto torus = verify_morse(torus_min(), Colouring::elementary(7, 0));
  o.expect(torus.is_morse() && torus.critical_counts() == std::vector<std::size_t>{1, 9, 8}, "torus_min critical counts");
  const auto rp2 = verify_morse(rp2_min(), Colouring::elementary(6, 0));
  o.expect(rp2.is_morse() && rp2.critical_counts() == std::vector<std::size_t>{1, 5, 5}, "rp2_min critical counts");
  return o;
}

Outcome iterated_matching() {
  Outcome o;
  const auto r = iterated_dalmatian(suite::two_stage_example(), std::vector<std::vector<std::size_t>>{{1}, {3}});
  o.expect(r.is_morse(), "not a Morse matching");
  o.expect(r.critical_counts() == std::vector<std::size_t>{2, 3, 1}, "critical counts");
  const std::vector<Simplex> cells{make_simplex({1}),    make_simplex({3}),    make_simplex({2, 3}),
                                   make_simplex({0, 4}), make_simplex({3, 5}), make_simplex({2, 3, 5})};
  o.expect(r.critical_cells == cells, "critical cells");
  return o;
}

Outcome tait_decomposition() {
  Outcome o;
  const std::vector<std::pair<std::string, PlaneGraph>> graphs{
      {"triangle", plane_cycle(3)},
      {"square", plane_cycle(4)},
      {"pentagon", plane_cycle(5)},
      {"path2", plane_path(2)},
      {"star3", star_plane(3)},
      {"triangle_with_tail", PlaneGraph::from_rotation({{1, 3, 2}, {2, 0}, {0, 1}, {0}})},
      {"square_with_chord", PlaneGraph::from_rotation({{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}})}};
  for (const auto& [name, g] : graphs) {
    const auto r = verify_tait_decomposition(g);
    o.expect(r.decomposition_ok(), name + ": " + show(r.lhs) + " vs " + show(r.rhs));
    o.expect(r.level0_ok(), name + ": weight-zero level");
    o.expect(r.top_ok(), name + ": full filtration");
  }
  o.note(std::to_string(graphs.size()) + " plane graphs, at most 5 edges");
  return o;
}

Outcome cubic_pair() {
  Outcome o;
  const std::vector<ThetaTuple> expected1{{2, 1, 2, 54}, {2, 1, 1, 6}, {2, 1, 0, 12}, {2, 0, 1, 6}, {2, 0, 0, 4}};
  const std::vector<ThetaTuple> expected2{{2, 1, 2, 54}, {2, 1, 1, 18}, {2, 0, 1, 6}, {2, 0, 0, 21}};
  const auto prism = prism_graph();
  const auto k33 = complete_bipartite_graph(3, 3);
  const auto tp = theta(prism, 2).tuples;
  const auto tk = theta(k33, 2).tuples;
  o.note("prism: " + show(tp));
  o.note("K33:   " + show(tk));
  const bool first = (tp == expected1 && tk == expected2) || (tk == expected1 && tp == expected2);
  o.expect(first, "the expected pair " + show(expected1) + " / " + show(expected2) + " is not reproduced");
  const bool second = tp == expected2 || tk == expected2;
  o.expect(second, "the second expected list is not reproduced");
  const auto d = dissimilarity(prism, k33, ThetaMode::per_colouring);
  o.expect(d.to_string() == "2/3" && d.first_level == 2, "delta = " + d.to_string());
  return o;
}

Outcome uber_closed_forms() {
  Outcome o;
  const auto edge = uber_homology(simplex_complex(1));
  o.expect(edge == TriGradedRanks{{{0, 0, 1}, 2}, {{0, 1, 2}, 1}, {{1, 0, 0}, 1}}, "edge");
  for (std::size_t n = 2; n <= 4; ++n) {
    TriGradedRanks expected{{{1, 0, 0}, 1}};
    for (std::size_t k = 0; k <= n; ++k)
      expected[{0, static_cast<int>(k), static_cast<int>(k) + 1}] = binomial(n + 1, k + 1);
    o.expect(uber_homology(simplex_complex(n)) == expected, "simplex " + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto u = uber_homology(simplex_boundary(n));
    BigradedRanks degree0;
    for (std::size_t p = 0; p + 2 <= n; ++p)
      degree0[{static_cast<int>(p), static_cast<int>(p) + 1}] = binomial(n + 1, p + 1);
    o.expect(uber_level(u, 0) == degree0, "sphere " + std::to_string(n) + " degree 0: " + show(uber_level(u, 0)));
    for (std::size_t j = 1; j <= n; ++j) {
      const BigradedRanks expected{{{static_cast<int>(n) - 1, static_cast<int>(n + 1 - j)}, binomial(n + 1, j)}};
      const auto got = uber_level(u, static_cast<int>(j));
      o.expect(got == expected, "sphere " + std::to_string(n) + " degree " + std::to_string(j) + ": computed " +
                                    show(got) + ", expected " + show(expected));
    }
  }
  for (std::size_t m = 3; m <= 6; ++m) {
    const auto u = uber_homology(loop_complex(m));
    o.expect(uber_level(u, 0).empty() == (m > 3), "loop " + std::to_string(m) + " degree 0");
    o.expect(uber_level(u, static_cast<int>(m)) == BigradedRanks{{{1, 0}, 1}}, "loop " + std::to_string(m) + " top");
  }
  return o;
}

Outcome degree_zero() {
  Outcome o;
  std::vector<suite::Named> complexes = suite::bundled();
  for (const auto& x : {torus_min(), cube_complex(3), grid_complex(2, 4), path_complex(4), loop_complex(7)})
    complexes.push_back({"extra", x});
  for (const auto& [name, x] : complexes) {
    const auto fast = uber_degree0_fast(x);
    if (x.vertex_count() <= 10)
      o.expect(fast == uber_level(uber_homology(x, only_level(0)), 0), name + ": fast path differs");
    if (diameter(x) >= 3) o.expect(fast.empty(), name + ": diameter at least 3 but degree 0 = " + show(fast));
  }
  std::size_t subdivisions = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto sd = barycentric_subdivision(simplex_complex(n));
    const auto fast = uber_degree0_fast(sd);
    o.expect(fast == BigradedRanks{{{0, 1}, 1}}, "subdivided simplex " + std::to_string(n) + ": " + show(fast));
    if (sd.vertex_count() <= 10) o.expect(fast == uber_level(uber_homology(sd, only_level(0)), 0), "direct");
    ++subdivisions;
  }
  for (const auto& [name, x] : suite::bundled()) {
    if (x.facets().size() == 1) continue;
    const auto sd = barycentric_subdivision(x);
    const auto fast = uber_degree0_fast(sd);
    o.expect(fast.empty(), "subdivided " + name + ": " + show(fast));
    if (sd.vertex_count() <= 10) o.expect(uber_level(uber_homology(sd, only_level(0)), 0).empty(), "direct " + name);
    ++subdivisions;
  }
  o.note(std::to_string(complexes.size()) + " complexes, " + std::to_string(subdivisions) + " subdivisions");
  return o;
}

Outcome top_degree() {
  Outcome o;
  for (const auto& [name, x] : std::vector<std::pair<std::string, SimplicialComplex>>{
           {"sphere3", simplex_boundary(3)}, {"rp2_min", rp2_min()}, {"torus_min", torus_min()}}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = uber_topdegree_check(x);
    o.expect(r.top == BigradedRanks{{{x.dim(), 0}, 1}}, name + ": top = " + show(r.top));
    o.expect(r.ok(), name + ": vertex cases");
    if (name != "torus_min") continue;
    const auto full = uber_homology(x);
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(uber_level(full, 7) == BigradedRanks{{{2, 0}, 1}}, "torus_min full cube: top = " + show(uber_level(full, 7)));
    o.expect(total < 120.0, "torus_min took " + std::to_string(total) + " s");
    o.note("torus_min with the full cube " + std::to_string(total) + " s");
  }
  return o;
}

Outcome cones_and_suspensions() {
  Outcome o;
  for (const auto& [name, x] : std::vector<std::pair<std::string, SimplicialComplex>>{
           {"sphere2", simplex_boundary(2)}, {"loop4", loop_complex(4)}}) {
    const auto r = cone_suspension_checks(x);
    o.expect(r.cone_top_ok(), name + ": cone top degree");
    o.expect(r.cone_degree0_ok(), name + ": cone degree 0");
    o.expect(r.suspension_degree0_ok(), name + ": suspension degree 0");
    o.expect(r.suspension_top && r.suspension_top_ok(), name + ": suspension top degree");
  }
  return o;
}

Outcome graph_homologies() {
  Outcome o;
  auto check = [&](const std::string& what, const GradedRanks& got, const GradedRanks& expected) {
    o.expect(got == expected, what + ": computed " + show(got) + ", expected " + show(expected));
  };
  for (std::size_t m = 3; m <= 6; ++m) check("H0(K" + std::to_string(m) + ")", h0_graph(complete_graph(m)), {{1, 1}});
  check("H0(P2)", h0_graph(path_graph(2)), {});
  check("H0(Cube(2))", h0_graph(cube_graph(2)), {{2, 1}});
  check("H0(Cube(3))", h0_graph(cube_graph(3)), {{4, 3}});
  check("H0(Grid(3,3))", h0_graph(grid_graph(3, 3)), {{5, 1}});
  for (std::size_t m = 3; m <= 6; ++m)
    check("H1_0(K" + std::to_string(m) + ")", h1_0(complete_graph(m)), {{0, m}});
  check("H1_1(L4)", h1_1(cycle_graph(4)), {{2, 4}});
  return o;
}

Outcome vanishing_sweeps() {
  Outcome o;
  std::size_t trees = 0, graphs = 0;
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& t : census::trees(n)) {
      ++trees;
      const auto h = h0_graph(t);
      o.expect(h.empty(), "tree " + to_graph6(t) + " (" + std::to_string(n) + " vertices): H0 = " + show(h));
    }
  for (std::size_t a = 2; a <= 3; ++a)
    for (std::size_t b = 2; b <= 3; ++b) {
      const auto h = h0_graph(complete_bipartite_graph(a, b));
      o.expect(h == GradedRanks{{2, 1}}, "K" + std::to_string(a) + std::to_string(b) + ": H0 = " + show(h));
    }
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& g : census::connected_graphs(n)) {
      ++graphs;
      const auto h = h2_graph(g);
      o.expect(h.empty(), "graph " + to_graph6(g) + " (" + std::to_string(n) + " vertices): H2 = " + show(h));
    }
  o.note(std::to_string(trees) + " trees, " + std::to_string(graphs) + " connected graphs");
  return o;
}

// Pairs in the same class at levels 0..j-1 but split at level j, by j.
std::map<int, std::size_t> separation_levels(const std::vector<SimpleGraph>& graphs, int max_level, Outcome& o,
                                             const std::string& family) {
  if (graphs.empty()) return {};
  max_level = std::min(max_level, static_cast<int>(graphs.front().vertex_count()));
  std::vector<std::vector<ThetaLevel>> keys(graphs.size());
  for (std::size_t a = 0; a < graphs.size(); ++a)
    for (int j = 0; j <= max_level; ++j) keys[a].push_back(theta(graphs[a], j, ThetaMode::per_colouring));
  std::map<int, std::size_t> needed;
  for (std::size_t a = 0; a < graphs.size(); ++a)
    for (std::size_t b = a + 1; b < graphs.size(); ++b) {
      int j = 0;
      while (j <= max_level && keys[a][static_cast<std::size_t>(j)] == keys[b][static_cast<std::size_t>(j)]) ++j;
      if (j > max_level)
        o.expect(false, family + ": " + to_graph6(graphs[a]) + " and " + to_graph6(graphs[b]) + " not separated by j = " +
                            std::to_string(max_level));
      else
        ++needed[j];
    }
  return needed;
}

Outcome separation_census() {
  Outcome o;
  std::map<int, std::size_t> graphs, trees;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& [j, c] : separation_levels(census::connected_graphs(n), 3, o, "connected")) graphs[j] += c;
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& [j, c] : separation_levels(census::trees(n), 3, o, "trees")) trees[j] += c;
  auto line = [](const std::string& what, const std::map<int, std::size_t>& m) {
    std::string s = what + " pairs by first separating level:";
    for (const auto& [j, c] : m) s += " j=" + std::to_string(j) + ":" + std::to_string(c);
    return s;
  };
  o.note(line("connected", graphs));
  o.note(line("tree", trees));
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(2024);

  std::vector<SimpleGraph> pool;
  for (int t = 0; t < 50; ++t) pool.push_back(census::random_connected(6, 0.35, rng));
  std::map<std::pair<std::size_t, std::size_t>, Dissimilarity> cache;
  auto delta = [&](std::size_t a, std::size_t b) {
    const auto key = std::minmax(a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, dissimilarity(pool[key.first], pool[key.second])).first;
    return it->second;
  };
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    o.expect(bounded_by_sum(delta(a, c), delta(a, b), delta(b, c)), "triangle inequality");
  }

  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 9);
    const auto g = census::random_connected(n, 0.3, rng);
    o.expect(vertex_cover_bijection_check(g), "vertex cover bijection on " + to_graph6(g));
  }

  o.expect(spacious_trees(complete_graph(3)).bijective, "spacious trees on K3");
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : census::trees(n)) o.expect(spacious_trees(t).bijective, "spacious trees on " + to_graph6(t));
  std::size_t chordal = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : census::connected_graphs(n))
      if (is_chordal(g)) {
        ++chordal;
        o.expect(spacious_trees(g).bijective, "spacious trees on " + to_graph6(g));
      }
  const auto five = spacious_trees(parse_graph6("Dso"));
  o.expect(five.bijective, "spacious trees on Dso");
  o.expect(five.maximal_trees.size() == 3, "Dso has " + std::to_string(five.maximal_trees.size()) + " maximal trees");

  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + static_cast<std::size_t>(t % 3);
    const auto g = census::random_connected(n, 0.4, rng);
    const auto h = g.relabel(census::random_permutation(n, rng));
    for (auto mode : {ThetaMode::aggregated, ThetaMode::per_colouring})
      for (int j = 0; j <= static_cast<int>(n); ++j)
        o.expect(theta(g, j, mode) == theta(h, j, mode), "theta relabelling on " + to_graph6(g));
  }
  for (int t = 0; t < 10; ++t) {
    const auto x = suite::random_complex(5, 4, rng);
    const auto base = uber_homology(x);
    for (int p = 0; p < 10; ++p) {
      const auto perm = census::random_permutation(x.vertex_count(), rng);
      o.expect(uber_homology(relabel(x, perm)) == base, "überhomology relabelling");
    }
  }
  o.note(std::to_string(cache.size()) + " distinct pairs, " + std::to_string(chordal) + " chordal graphs");
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "triangle with one black vertex", triangle_one_black, 0.001},
      {2, "tetrahedron with alternating colouring", tetrahedron_alternating, 0.001},
      {3, "extreme colourings and square-zero differentials on the bundled suite", extreme_colourings_and_square_zero, 0},
      {4, "dalmatian colourings are exactly the Morse ones; critical cells match homology", dalmatian_equivalence, 0},
      {5, "elementary decomposition; torus and projective plane critical counts", elementary_partition, 0},
      {6, "iterated dalmatian matching", iterated_matching, 0},
      {7, "Tait decomposition on small plane graphs", tait_decomposition, 60},
      {8, "theta lists and dissimilarity of the two cubic graphs on six vertices", cubic_pair, 5},
      {9, "überhomology of simplices, their boundaries and loops", uber_closed_forms, 120},
      {10, "degree zero from the star intersection", degree_zero, 0},
      {11, "top degree of closed manifolds", top_degree, 0},
      {12, "cones and suspensions", cones_and_suspensions, 0},
      {13, "graph homologies of complete graphs, cubes, grids and loops", graph_homologies, 0},
      {14, "vanishing sweeps over trees, bipartite and connected graphs", vanishing_sweeps, 0},
      {15, "theta separates connected graphs up to 7 and trees up to 10 vertices by level 3", separation_census, 300},
      {16, "triangle inequality, vertex covers, spacious trees, relabelling", properties, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && s > c.limit_seconds) {
      o.pass = false;
      o.notes.push_back("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    if (!o.pass) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", s);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << timing << ")\n";
    for (const auto& n : o.notes) std::cout << "     " << n << '\n';
    std::cout.flush();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
