#include "uberhom/plane.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "uberhom/error.hpp"

namespace uberhom {

namespace {

void trim_zeros(std::vector<std::size_t>& ranks) {
  while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
}

}  // namespace

PlaneGraph::PlaneGraph(std::size_t vertex_count, std::vector<Edge> edges,
                       std::vector<std::vector<std::size_t>> rotation)
    : edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (vertex_count == 0 || rotation_.size() != vertex_count)
    fail(ErrorKind::invalid_argument, "rotation system needs one list per vertex");
  if (edges_.empty()) fail(ErrorKind::invalid_argument, "plane graph has no edges");
  const std::size_t darts = 2 * edges_.size();
  for (const auto& [u, v] : edges_)
    if (u >= vertex_count || v >= vertex_count) fail(ErrorKind::invalid_argument, "edge endpoint out of range");

  position_.assign(darts, SIZE_MAX);
  for (std::size_t v = 0; v < vertex_count; ++v)
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      const std::size_t d = rotation_[v][i];
      if (d >= darts || position_[d] != SIZE_MAX) fail(ErrorKind::invalid_argument, "dart listed twice or out of range");
      if (tail(d) != v) fail(ErrorKind::invalid_argument, "dart listed at a vertex it does not leave");
      position_[d] = i;
    }
  if (std::find(position_.begin(), position_.end(), SIZE_MAX) != position_.end())
    fail(ErrorKind::invalid_argument, "dart missing from the rotation system");

  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertex_count;
  for (const auto& [u, v] : edges_)
    if (find(u) != find(v)) {
      parent[find(u)] = find(v);
      --components;
    }
  if (components != 1) fail(ErrorKind::invalid_argument, "plane graph is not connected");

  face_of_.assign(darts, SIZE_MAX);
  for (std::size_t d = 0; d < darts; ++d) {
    if (face_of_[d] != SIZE_MAX) continue;
    std::vector<std::size_t> face;
    for (std::size_t x = d; face_of_[x] == SIZE_MAX; x = next_in_face(x)) {
      face_of_[x] = faces_.size();
      face.push_back(x);
    }
    faces_.push_back(std::move(face));
  }
  if (vertex_count + faces_.size() != edges_.size() + 2)
    fail(ErrorKind::invalid_argument, "rotation system is not a sphere embedding (V - E + F = " +
                                          std::to_string(static_cast<long long>(vertex_count + faces_.size()) -
                                                         static_cast<long long>(edges_.size())) +
                                          ")");
}

std::size_t PlaneGraph::tail(std::size_t dart) const noexcept {
  const auto& [u, v] = edges_[dart / 2];
  return dart % 2 == 0 ? u : v;
}

std::size_t PlaneGraph::next_in_face(std::size_t dart) const {
  const std::size_t back = dart ^ 1u;
  const auto& around = rotation_[tail(back)];
  return around[(position_[back] + 1) % around.size()];
}

PlaneGraph PlaneGraph::from_rotation(const std::vector<std::vector<std::size_t>>& rotation) {
  const std::size_t n = rotation.size();
  std::map<Edge, std::size_t> index;
  for (std::size_t u = 0; u < n; ++u)
    for (auto v : rotation[u]) {
      if (v >= n) fail(ErrorKind::invalid_argument, "neighbour out of range");
      if (v == u) fail(ErrorKind::invalid_argument, "loops are not allowed in a rotation list");
      index.emplace(Edge(std::min(u, v), std::max(u, v)), 0);
    }
  std::vector<Edge> edges;
  for (auto& [e, id] : index) {
    id = edges.size();
    edges.push_back(e);
  }
  std::vector<std::vector<std::size_t>> darts(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (auto v : rotation[u]) {
      const std::size_t e = index.at(Edge(std::min(u, v), std::max(u, v)));
      darts[u].push_back(2 * e + (u == edges[e].first ? 0 : 1));
    }
    auto sorted = rotation[u];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::invalid_argument, "neighbour repeated in a rotation list");
  }
  for (std::size_t u = 0; u < n; ++u)
    for (auto v : rotation[u])
      if (std::find(rotation[v].begin(), rotation[v].end(), u) == rotation[v].end())
        fail(ErrorKind::invalid_argument, "rotation lists are not symmetric at " + std::to_string(u) + "-" +
                                              std::to_string(v));
  return PlaneGraph(n, std::move(edges), std::move(darts));
}

PlaneGraph PlaneGraph::parse(std::string_view text) {
  std::map<std::size_t, std::vector<std::size_t>> lists;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto bad = [&](const std::string& what) {
    fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + what);
  };
  auto number = [&](std::string_view token) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) bad("expected a vertex id, got '" + std::string(token) + "'");
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream words(line);
    std::string word;
    if (!(words >> word)) continue;
    if (word != "v") bad("expected 'v <id>: <neighbours>'");
    std::string id;
    if (!(words >> id)) bad("missing vertex id");
    if (id.back() == ':') {
      id.pop_back();
    } else {
      std::string colon;
      if (!(words >> colon) || colon != ":") bad("missing ':'");
    }
    const std::size_t v = number(id);
    if (lists.contains(v)) bad("vertex " + id + " listed twice");
    auto& out = lists[v];
    while (words >> word) out.push_back(number(word));
  }
  if (lists.empty()) fail(ErrorKind::parse, "no vertices");
  std::vector<std::vector<std::size_t>> rotation;
  for (const auto& [v, list] : lists) {
    if (v != rotation.size()) fail(ErrorKind::parse, "vertex ids must be 0.." + std::to_string(lists.size() - 1));
    rotation.push_back(list);
  }
  return from_rotation(rotation);
}

std::string PlaneGraph::to_text() const {
  std::string out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    out += "v " + std::to_string(v) + ":";
    for (auto d : rotation_[v]) out += " " + std::to_string(head(d));
    out += "\n";
  }
  return out;
}

bool PlaneGraph::is_simple() const {
  std::vector<Edge> sorted;
  for (const auto& [u, v] : edges_) {
    if (u == v) return false;
    sorted.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

SimpleGraph PlaneGraph::graph() const {
  if (!is_simple()) fail(ErrorKind::invalid_argument, "plane graph has loops or parallel edges");
  return SimpleGraph::from_edges(vertex_count(), edges_);
}

PlaneGraph dual_graph(const PlaneGraph& g) {
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) edges.emplace_back(g.face_of(2 * e), g.face_of(2 * e + 1));
  return PlaneGraph(g.face_count(), std::move(edges), g.faces());
}

PlaneGraph plane_cycle(std::size_t n) {
  if (n < 3) fail(ErrorKind::invalid_argument, "a cycle needs at least 3 vertices");
  std::vector<std::vector<std::size_t>> rotation(n);
  for (std::size_t v = 0; v < n; ++v) rotation[v] = {(v + 1) % n, (v + n - 1) % n};
  return PlaneGraph::from_rotation(rotation);
}

PlaneGraph plane_path(std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_argument, "a path needs at least one edge");
  std::vector<std::vector<std::size_t>> rotation(n + 1);
  for (std::size_t v = 0; v <= n; ++v) {
    if (v > 0) rotation[v].push_back(v - 1);
    if (v < n) rotation[v].push_back(v + 1);
  }
  return PlaneGraph::from_rotation(rotation);
}

PlaneGraph plane_wheel(std::size_t n) {
  if (n < 3) fail(ErrorKind::invalid_argument, "a wheel needs at least 3 rim vertices");
  std::vector<std::vector<std::size_t>> rotation(n + 1);
  for (std::size_t v = 0; v < n; ++v) {
    rotation[v] = {(v + 1) % n, n, (v + n - 1) % n};
    rotation[n].push_back(v);
  }
  return PlaneGraph::from_rotation(rotation);
}

TaitGraph tait_graph(const PlaneGraph& g) {
  TaitGraph t;
  t.graph_vertices = g.vertex_count();
  t.faces = g.face_count();
  t.crossings = g.edge_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t c = t.graph_vertices + t.faces + e;
    const auto [u, v] = g.edges()[e];
    t.edges.emplace_back(u, c);
    t.edges.emplace_back(v, c);
    t.edges.emplace_back(t.graph_vertices + g.face_of(2 * e), c);
    t.edges.emplace_back(t.graph_vertices + g.face_of(2 * e + 1), c);
    t.black.insert(t.black.end(), {true, true, false, false});
  }
  return t;
}

Colouring tait_colouring(const TaitGraph& t) {
  if (t.edges.size() > kMaxVertices)
    fail(ErrorKind::resource_cap, "Tait graph has " + std::to_string(t.edges.size()) + " edges, above " +
                                      std::to_string(kMaxVertices));
  std::uint64_t mask = 0;
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    if (t.black[e]) mask |= std::uint64_t{1} << e;
  return Colouring(t.edges.size(), mask);
}

std::vector<Edge> subdivision_edges(const TaitGraph& t) {
  std::vector<Edge> out;
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    if (t.black[e]) out.push_back(t.edges[e]);
  return out;
}

std::vector<Edge> dual_subdivision_edges(const TaitGraph& t) {
  std::vector<Edge> out;
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    if (!t.black[e]) out.push_back(t.edges[e]);
  return out;
}

TaitReport verify_tait_decomposition(const PlaneGraph& g) {
  const auto t = tait_graph(g);
  const auto colouring = tait_colouring(t);
  const auto tait_matchings = matching_complex(t.edges);
  TaitReport report;
  report.lhs = horizontal_homology(tait_matchings, colouring);

  // Half-edges of g are numbered 2e, 2e + 1 within the subdivision.
  const auto half_edges = subdivision_edges(t);
  const auto white = dual_subdivision_edges(t);
  const std::size_t crossing0 = t.graph_vertices + t.faces;

  auto add_rhs = [&](std::uint64_t covered, std::size_t k) {
    std::vector<Edge> remaining;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (((covered >> e) & 1u) == 0) {
        remaining.push_back(half_edges[2 * e]);
        remaining.push_back(half_edges[2 * e + 1]);
      }
    const int shift = static_cast<int>(k);
    if (k == 0) {
      const auto ranks = homology_ranks(matching_complex(remaining));
      for (std::size_t d = 0; d < ranks.size(); ++d)
        if (ranks[d] != 0) report.rhs[{static_cast<int>(d), 0}] += ranks[d];
      return;
    }
    const auto reduced = remaining.empty() ? std::map<int, std::size_t>{{-1, 1}}
                                           : reduced_homology_ranks(matching_complex(remaining));
    for (const auto& [d, r] : reduced) report.rhs[{d + shift, shift}] += r;
  };

  // Matchings of the white edges, tracking Tait vertices used and crossings
  // covered.
  auto extend = [&](auto&& self, std::size_t from, std::uint64_t used, std::uint64_t covered, std::size_t k) -> void {
    if (report.matchings_by_size.size() <= k) report.matchings_by_size.resize(k + 1, 0);
    ++report.matchings_by_size[k];
    add_rhs(covered, k);
    for (std::size_t w = from; w < white.size(); ++w) {
      const auto [f, c] = white[w];
      const std::uint64_t ends = (std::uint64_t{1} << f) | (std::uint64_t{1} << c);
      if ((used & ends) != 0) continue;
      self(self, w + 1, used | ends, covered | (std::uint64_t{1} << (c - crossing0)), k + 1);
    }
  };
  if (t.vertex_count() > kMaxVertices) fail(ErrorKind::resource_cap, "Tait graph has too many vertices");
  extend(extend, 0, 0, 0, 0);

  for (const auto& [grading, r] : report.lhs)
    if (grading.second == 0) {
      const auto d = static_cast<std::size_t>(grading.first);
      if (report.level0.size() <= d) report.level0.resize(d + 1, 0);
      report.level0[d] = r;
    }
  report.subdivision_homology = homology_ranks(matching_complex(half_edges));
  trim_zeros(report.subdivision_homology);
  report.top_filtration = filtered_homology(tait_matchings, colouring, static_cast<int>(g.edge_count()));
  trim_zeros(report.top_filtration);
  report.tait_homology = homology_ranks(tait_matchings);
  trim_zeros(report.tait_homology);
  return report;
}

}  // namespace uberhom
