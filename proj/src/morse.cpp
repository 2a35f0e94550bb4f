#include "uberhom/morse.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "uberhom/error.hpp"

namespace uberhom {

std::vector<std::size_t> MorseReport::critical_counts() const {
  std::vector<std::size_t> counts;
  for (Simplex s : critical_cells) {
    const auto d = static_cast<std::size_t>(simplex_dim(s));
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return counts;
}

std::vector<PosetEdge> induced_subgraph(const SimplicialComplex& x, const Colouring& colouring) {
  check_lengths(x, colouring);
  std::vector<PosetEdge> edges;
  for (int d = 1; d <= x.dim(); ++d)
    for (Simplex s : x.simplices(d))
      for (Simplex b = s & colouring.black_mask(); b != 0; b &= b - 1)
        edges.push_back({s, s & ~(b & (~b + 1))});
  return edges;
}

namespace {

// Vertex set of the closed star of v: v and its neighbours.
Simplex closed_star_vertices(const std::vector<std::uint64_t>& adj, std::size_t v) {
  return adj[v] | (Simplex{1} << v);
}

}  // namespace

bool is_dalmatian(const SimplicialComplex& x, const Colouring& colouring) {
  check_lengths(x, colouring);
  if (colouring.black_mask() == 0) return false;
  // Two closed stars share a simplex exactly when they share a vertex.
  const auto adj = x.adjacency();
  Simplex seen = 0;
  for (Simplex b = colouring.black_mask(); b != 0; b &= b - 1) {
    const Simplex cs = closed_star_vertices(adj, static_cast<std::size_t>(std::countr_zero(b)));
    if ((cs & seen) != 0) return false;
    seen |= cs;
  }
  return true;
}

MorseReport check_matching(const SimplicialComplex& x, std::span<const PosetEdge> edges) {
  MorseReport report;
  report.edges.assign(edges.begin(), edges.end());
  std::unordered_map<Simplex, Simplex> partner;
  for (const auto& e : edges) {
    const bool valid = x.contains(e.upper) && x.contains(e.lower) && (e.lower & ~e.upper) == 0 &&
                       std::popcount(e.upper ^ e.lower) == 1;
    if (!valid) fail(ErrorKind::invalid_argument, "not a face-poset edge: " + simplex_to_string(e.upper) +
                                                      " > " + simplex_to_string(e.lower));
    if (partner.contains(e.upper) || partner.contains(e.lower)) return report;
    partner[e.upper] = e.lower;
    partner[e.lower] = e.upper;
  }
  report.is_matching = true;

  // Cycles of the modified Hasse diagram stay inside a pair of adjacent
  // layers, so each layer pair is searched on its own.
  report.is_acyclic = true;
  for (int n = 1; n <= x.dim() && report.is_acyclic; ++n) {
    const auto upper = x.simplices(n);
    const auto lower = x.simplices(n - 1);
    // Nodes: uppers first, then lowers.
    const std::size_t nu = upper.size();
    std::vector<std::vector<std::size_t>> out(nu + lower.size());
    for (std::size_t u = 0; u < nu; ++u)
      for (Simplex r = upper[u]; r != 0; r &= r - 1) {
        const Simplex face = upper[u] & ~(r & (~r + 1));
        const std::size_t l = nu + x.index_of(face);
        auto it = partner.find(upper[u]);
        if (it != partner.end() && it->second == face)
          out[l].push_back(u);
        else
          out[u].push_back(l);
      }
    std::vector<int> state(out.size(), 0);  // 0 new, 1 on stack, 2 done
    for (std::size_t start = 0; start < out.size() && report.is_acyclic; ++start) {
      if (state[start] != 0) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
      state[start] = 1;
      while (!stack.empty() && report.is_acyclic) {
        auto& [node, next] = stack.back();
        if (next == out[node].size()) {
          state[node] = 2;
          stack.pop_back();
          continue;
        }
        const std::size_t to = out[node][next++];
        if (state[to] == 1) report.is_acyclic = false;
        else if (state[to] == 0) {
          state[to] = 1;
          stack.emplace_back(to, 0);
        }
      }
    }
  }

  for (Simplex s : x.simplices())
    if (!partner.contains(s)) report.critical_cells.push_back(s);
  return report;
}

MorseReport verify_morse(const SimplicialComplex& x, const Colouring& colouring) {
  const auto edges = induced_subgraph(x, colouring);
  return check_matching(x, edges);
}

std::map<std::size_t, std::vector<PosetEdge>> elementary_decomposition(const SimplicialComplex& x,
                                                                       const Colouring& colouring) {
  std::map<std::size_t, std::vector<PosetEdge>> parts;
  for (const auto& e : induced_subgraph(x, colouring))
    parts[static_cast<std::size_t>(std::countr_zero(e.upper ^ e.lower))].push_back(e);
  return parts;
}

DalmatianHomology dalmatian_closed_form(const SimplicialComplex& x, const Colouring& colouring) {
  if (!is_dalmatian(x, colouring)) fail(ErrorKind::invalid_argument, "colouring is not dalmatian");
  DalmatianHomology out;
  const Simplex black = colouring.black_mask();
  for (Simplex b = black; b != 0; b &= b - 1) out.generators.push_back({{0, 0}, b & (~b + 1)});
  // s lies in the closed star of v iff s + v is a simplex.
  for (Simplex s : x.simplices()) {
    bool in_union = false;
    for (Simplex b = black; b != 0 && !in_union; b &= b - 1)
      in_union = x.contains(s | (b & (~b + 1)));
    if (!in_union) out.generators.push_back({{simplex_dim(s), simplex_dim(s) + 1}, s});
  }
  for (const auto& [grading, s] : out.generators) ++out.ranks[grading];
  return out;
}

MorseReport iterated_dalmatian(const SimplicialComplex& x, std::span<const std::vector<std::size_t>> stages) {
  const std::size_t m = x.vertex_count();
  const auto adj = x.adjacency();
  std::unordered_map<Simplex, bool> alive;
  for (Simplex s : x.simplices()) alive[s] = true;
  std::vector<PosetEdge> matching;
  Simplex covered = 0;

  for (std::size_t p = 0; p < stages.size(); ++p) {
    const std::string where = "stage " + std::to_string(p) + ": ";
    Simplex d = 0;
    for (auto v : stages[p]) {
      if (v >= m) fail(ErrorKind::invalid_argument, where + "vertex " + std::to_string(v) + " out of range");
      d |= Simplex{1} << v;
    }
    if (!is_dalmatian(x, Colouring(m, d)))
      fail(ErrorKind::invalid_argument, where + "colouring is not dalmatian");
    if ((d & covered) != 0)
      fail(ErrorKind::invalid_argument, where + "black vertex inside an earlier closed star");
    // Pair alive s containing v with alive s - v; dalmatian stages never put
    // two black vertices in one simplex.
    for (int n = x.dim(); n >= 1; --n)
      for (Simplex s : x.simplices(n)) {
        const Simplex b = s & d;
        if (b == 0 || !alive[s]) continue;
        const Simplex face = s & ~b;
        if (!alive[face]) continue;
        matching.push_back({s, face});
        alive[s] = false;
        alive[face] = false;
      }
    for (Simplex b = d; b != 0; b &= b - 1)
      covered |= closed_star_vertices(adj, static_cast<std::size_t>(std::countr_zero(b)));
  }
  if ((covered & x.vertex_mask()) != x.vertex_mask())
    fail(ErrorKind::invalid_argument, "closed stars of the stages do not cover every vertex");
  std::sort(matching.begin(), matching.end());
  return check_matching(x, matching);
}

}  // namespace uberhom
