#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "uberhom/coloured.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/error.hpp"
#include "uberhom/graph.hpp"
#include "uberhom/morse.hpp"
#include "uberhom/parallel.hpp"
#include "uberhom/plane.hpp"
#include "uberhom/uber.hpp"

namespace uberhom::cli {
namespace {

using Json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

struct Options {
  std::string command;
  std::string input;
  std::string which;
  std::string colouring;
  std::optional<int> level;
  std::optional<std::size_t> cap;
  std::size_t jobs = 1;
  std::string format;
  std::string mode;
  bool generators = false;
};

struct Report {
  Json json;
  Row header;
  std::vector<Row> rows;
};

struct Input {
  std::string source;
  std::string text;
  bool builtin = false;
  std::string name;
  std::vector<std::size_t> params;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::invalid_argument:
      return kExitParse;
    case ErrorKind::dimension_mismatch:
      return kExitDimension;
    case ErrorKind::resource_cap:
      return kExitResourceCap;
    case ErrorKind::internal:
      break;
  }
  return kExitCheckFailed;
}

std::size_t parse_size(std::string_view text, const std::string& what) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    fail(ErrorKind::parse, what + " is not a nonnegative integer: '" + std::string(text) + "'");
  return value;
}

std::string fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

// "builtin:NAME" or "builtin:NAME:p,q"; anything else is a path or "-".
Input read_input(const std::string& source) {
  Input in;
  in.source = source;
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) {
    in.builtin = true;
    in.text = source;
    const std::string rest = source.substr(prefix.size());
    const auto colon = rest.find(':');
    in.name = rest.substr(0, colon);
    if (colon != std::string::npos) {
      std::stringstream params(rest.substr(colon + 1));
      for (std::string p; std::getline(params, p, ',');) in.params.push_back(parse_size(p, "builtin parameter"));
    }
    if (in.name.empty()) fail(ErrorKind::parse, "empty builtin name");
    return in;
  }
  std::ostringstream buffer;
  if (source == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(source, std::ios::binary);
    if (!file) fail(ErrorKind::invalid_argument, "cannot read " + source);
    buffer << file.rdbuf();
  }
  in.text = buffer.str();
  return in;
}

Json metadata(const Input& in, std::size_t vertices) {
  Json meta;
  meta["source"] = in.source;
  meta["fnv1a64"] = fnv1a64(in.text);
  meta["vertices"] = vertices;
  Json order = Json::array();
  for (std::size_t v = 0; v < vertices; ++v) order.push_back(v);
  meta["vertex_order"] = order;
  return meta;
}

SimplicialComplex load_complex(const Input& in) {
  if (in.builtin) return standard_complex(in.name, in.params);
  return parse_facet_text(in.text);
}

SimpleGraph graph_from_token(const std::string& token) {
  if (token.starts_with("builtin:")) {
    const auto in = read_input(token);
    return standard_graph(in.name, in.params);
  }
  return parse_graph6(token);
}

SimpleGraph load_graph(const Input& in) {
  if (in.builtin) return standard_graph(in.name, in.params);
  const auto graphs = parse_graph6_lines(in.text);
  if (graphs.size() != 1)
    fail(ErrorKind::parse, "expected one graph6 line, found " + std::to_string(graphs.size()));
  return graphs.front();
}

PlaneGraph load_plane(const Input& in) {
  if (!in.builtin) return PlaneGraph::parse(in.text);
  if (in.params.size() != 1) fail(ErrorKind::parse, "plane builtins take one parameter");
  const std::size_t n = in.params[0];
  if (in.name == "cycle") return plane_cycle(n);
  if (in.name == "path") return plane_path(n);
  if (in.name == "wheel") return plane_wheel(n);
  fail(ErrorKind::parse, "unknown plane builtin '" + in.name + "'");
}

void check_cap(std::size_t m, std::size_t cap, const std::string& what) {
  if (m > cap)
    fail(ErrorKind::resource_cap, what + " on " + std::to_string(m) + " vertices exceeds the cap of " +
                                      std::to_string(cap));
}

std::vector<Colouring> resolve_colourings(const Options& opt, const SimplicialComplex& x, std::size_t cap) {
  const std::size_t m = x.vertex_count();
  const std::string& spec = opt.colouring;
  std::vector<Colouring> out;
  if (spec.empty()) fail(ErrorKind::invalid_argument, "--colouring is required");
  if (spec == "all") {
    check_cap(m, cap, "enumerating all colourings");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) out.emplace_back(m, mask);
  } else if (spec.starts_with("elementary:")) {
    out.push_back(Colouring::elementary(m, parse_size(spec.substr(11), "elementary index")));
  } else if (spec.starts_with("level:")) {
    check_cap(m, cap, "enumerating a level of colourings");
    const std::size_t j = parse_size(spec.substr(6), "colouring level");
    if (j > m) fail(ErrorKind::invalid_argument, "colouring level above the vertex count");
    out = colourings_of_norm(m, j);
  } else {
    out.push_back(Colouring::parse(spec));
  }
  for (const auto& c : out) check_lengths(x, c);
  return out;
}

std::string key2(int i, int k) { return "(" + std::to_string(i) + "," + std::to_string(k) + ")"; }

Json ranks_json(const BigradedRanks& ranks) {
  Json out = Json::object();
  for (const auto& [g, r] : ranks)
    if (r != 0) out[key2(g.first, g.second)] = r;
  return out;
}

Json graded_json(const GradedRanks& ranks) {
  Json out = Json::object();
  for (const auto& [d, r] : ranks)
    if (r != 0) out[std::to_string(d)] = r;
  return out;
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> ranks) {
  while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
  return ranks;
}

std::string cycle_string(const std::vector<Simplex>& cycle) {
  std::string out;
  for (Simplex s : cycle) out += (out.empty() ? "" : "+") + simplex_to_string(s);
  return out;
}

Json edges_json(std::span<const PosetEdge> edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({simplex_to_string(e.upper), simplex_to_string(e.lower)});
  return out;
}

ThetaMode theta_mode(const Options& opt, ThetaMode fallback) {
  if (opt.mode.empty()) return fallback;
  return opt.mode == "aggregated" ? ThetaMode::aggregated : ThetaMode::per_colouring;
}

std::string mode_name(ThetaMode mode) { return mode == ThetaMode::aggregated ? "aggregated" : "per-colouring"; }

// ------------------------------------------------------------ complexes

Report cmd_horizontal(const Options& opt, const Input& in, const SimplicialComplex& x, std::size_t cap,
                      bool diagonal) {
  Report rep;
  rep.header = {"colouring", "i", "k", "rank"};
  if (opt.generators && !diagonal) rep.header.push_back("generators");
  Json results = Json::array();
  const auto colourings = resolve_colourings(opt, x, cap);
  for (const auto& c : colourings) {
    Json entry;
    entry["colouring"] = c.to_string();
    const auto ranks = diagonal ? diagonal_homology(x, c) : horizontal_homology(x, c);
    entry["ranks"] = ranks_json(ranks);
    std::map<Bigrading, std::vector<std::vector<Simplex>>> gens;
    if (opt.generators && !diagonal) {
      gens = horizontal_generators(x, c);
      Json g = Json::object();
      for (const auto& [bg, cycles] : gens) {
        Json list = Json::array();
        for (const auto& cycle : cycles) {
          Json simplices = Json::array();
          for (Simplex s : cycle) simplices.push_back(simplex_to_string(s));
          list.push_back(simplices);
        }
        g[key2(bg.first, bg.second)] = list;
      }
      entry["generators"] = g;
    }
    for (const auto& [bg, r] : ranks) {
      if (r == 0) continue;
      Row row{c.to_string(), std::to_string(bg.first), std::to_string(bg.second), std::to_string(r)};
      if (opt.generators && !diagonal) {
        std::string cell;
        for (const auto& cycle : gens[bg]) cell += (cell.empty() ? "" : "; ") + cycle_string(cycle);
        row.push_back(cell);
      }
      rep.rows.push_back(std::move(row));
    }
    results.push_back(entry);
  }
  rep.json["command"] = diagonal ? "diagonal" : "horizontal";
  rep.json["input"] = metadata(in, x.vertex_count());
  rep.json["results"] = results;
  return rep;
}

Report cmd_filtered(const Options& opt, const Input& in, const SimplicialComplex& x, std::size_t cap) {
  Report rep;
  rep.header = {"colouring", "k", "i", "rank"};
  const int top = x.dim() + 1;
  if (opt.level && (*opt.level < 0 || *opt.level > std::max(top, 0)))
    fail(ErrorKind::invalid_argument, "filtration level out of range");
  Json results = Json::array();
  for (const auto& c : resolve_colourings(opt, x, cap)) {
    Json levels = Json::object();
    for (int k = opt.level.value_or(0); k <= (opt.level ? *opt.level : top); ++k) {
      const auto ranks = trimmed(filtered_homology(x, c, k));
      levels[std::to_string(k)] = ranks;
      for (std::size_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] != 0) rep.rows.push_back({c.to_string(), std::to_string(k), std::to_string(i), std::to_string(ranks[i])});
    }
    results.push_back({{"colouring", c.to_string()}, {"filtration", levels}});
  }
  rep.json["command"] = "filtered";
  rep.json["input"] = metadata(in, x.vertex_count());
  rep.json["results"] = results;
  return rep;
}

Report cmd_euler(const Options& opt, const Input& in, const SimplicialComplex& x, std::size_t cap) {
  Report rep;
  rep.header = {"colouring", "coefficients", "euler_characteristic"};
  Json results = Json::array();
  for (const auto& c : resolve_colourings(opt, x, cap)) {
    const auto poly = graded_euler(x, c);
    const auto chi = evaluate(poly, 1);
    std::string coefficients;
    for (auto a : poly) coefficients += (coefficients.empty() ? "" : " ") + std::to_string(a);
    rep.rows.push_back({c.to_string(), coefficients, std::to_string(chi)});
    results.push_back({{"colouring", c.to_string()}, {"coefficients", poly}, {"euler_characteristic", chi}});
  }
  rep.json["command"] = "euler";
  rep.json["input"] = metadata(in, x.vertex_count());
  rep.json["results"] = results;
  return rep;
}

Report cmd_morse(const Options& opt, const Input& in, const SimplicialComplex& x, std::size_t cap) {
  Report rep;
  rep.header = {"colouring", "dalmatian", "matching", "acyclic", "critical_counts"};
  Json results = Json::array();
  for (const auto& c : resolve_colourings(opt, x, cap)) {
    const auto report = verify_morse(x, c);
    const bool dalmatian = is_dalmatian(x, c);
    Json entry;
    entry["colouring"] = c.to_string();
    entry["dalmatian"] = dalmatian;
    entry["matching"] = report.is_matching;
    entry["acyclic"] = report.is_acyclic;
    entry["edges"] = edges_json(report.edges);
    if (report.is_morse()) {
      Json cells = Json::array();
      for (Simplex s : report.critical_cells) cells.push_back(simplex_to_string(s));
      entry["critical_cells"] = cells;
      entry["critical_counts"] = report.critical_counts();
    }
    if (dalmatian) entry["closed_form"] = ranks_json(dalmatian_closed_form(x, c).ranks);
    std::string counts;
    if (report.is_morse())
      for (auto n : report.critical_counts()) counts += (counts.empty() ? "" : " ") + std::to_string(n);
    rep.rows.push_back({c.to_string(), dalmatian ? "yes" : "no", report.is_matching ? "yes" : "no",
                        report.is_acyclic ? "yes" : "no", counts.empty() ? "-" : counts});
    results.push_back(entry);
  }
  rep.json["command"] = "morse";
  rep.json["input"] = metadata(in, x.vertex_count());
  rep.json["results"] = results;
  return rep;
}

Report cmd_decompose(const Options& opt, const Input& in, const SimplicialComplex& x, std::size_t cap) {
  Report rep;
  rep.header = {"colouring", "vertex", "upper", "lower"};
  Json results = Json::array();
  for (const auto& c : resolve_colourings(opt, x, cap)) {
    Json parts = Json::object();
    for (const auto& [v, edges] : elementary_decomposition(x, c)) {
      parts[std::to_string(v)] = edges_json(edges);
      for (const auto& e : edges)
        rep.rows.push_back({c.to_string(), std::to_string(v), simplex_to_string(e.upper), simplex_to_string(e.lower)});
    }
    results.push_back({{"colouring", c.to_string()}, {"parts", parts}});
  }
  rep.json["command"] = "decompose";
  rep.json["input"] = metadata(in, x.vertex_count());
  rep.json["results"] = results;
  return rep;
}

Report cmd_uber(const Options& opt, const Input& in, const SimplicialComplex& x, std::size_t cap) {
  UberOptions uo;
  uo.cap = cap;
  uo.jobs = opt.jobs;
  if (opt.level) {
    uo.first_level = *opt.level;
    uo.last_level = *opt.level;
  }
  const auto ranks = uber_homology(x, uo);
  Report rep;
  rep.header = {"j", "i", "k", "rank"};
  Json levels = Json::object();
  for (const auto& [g, r] : ranks) {
    if (r == 0) continue;
    const auto [j, i, k] = g;
    levels[std::to_string(j)][key2(i, k)] = r;
    rep.rows.push_back({std::to_string(j), std::to_string(i), std::to_string(k), std::to_string(r)});
  }
  rep.json["command"] = "uber";
  rep.json["input"] = metadata(in, x.vertex_count());
  rep.json["levels"] = levels;
  return rep;
}

Report cmd_uber0(const Input& in, const SimplicialComplex& x) {
  const auto ranks = uber_degree0_fast(x);
  Report rep;
  rep.header = {"i", "k", "rank"};
  for (const auto& [g, r] : ranks)
    if (r != 0) rep.rows.push_back({std::to_string(g.first), std::to_string(g.second), std::to_string(r)});
  rep.json["command"] = "uber0";
  rep.json["input"] = metadata(in, x.vertex_count());
  rep.json["ranks"] = ranks_json(ranks);
  return rep;
}

// ------------------------------------------------------------ graphs

Report cmd_theta(const Options& opt, const Input& in, const SimpleGraph& g, std::size_t cap) {
  const int m = static_cast<int>(g.vertex_count());
  if (opt.level && (*opt.level < 0 || *opt.level > m)) fail(ErrorKind::invalid_argument, "theta level out of range");
  const int first = opt.level.value_or(0);
  const int last = opt.level.value_or(m);
  if (last >= 2) check_cap(g.vertex_count(), cap, "theta");
  const auto mode = theta_mode(opt, ThetaMode::aggregated);
  Report rep;
  rep.header = {"j", "i", "k", "rank"};
  Json levels = Json::object();
  for (int j = first; j <= last; ++j) {
    Json tuples = Json::array();
    for (const auto& t : theta(g, j, mode, opt.jobs).tuples) {
      tuples.push_back({t.j, t.i, t.k, t.r});
      rep.rows.push_back({std::to_string(t.j), std::to_string(t.i), std::to_string(t.k), std::to_string(t.r)});
    }
    levels[std::to_string(j)] = tuples;
  }
  rep.json["command"] = "theta";
  rep.json["input"] = metadata(in, g.vertex_count());
  rep.json["graph6"] = to_graph6(g);
  rep.json["mode"] = mode_name(mode);
  rep.json["levels"] = levels;
  return rep;
}

Report cmd_graph_hom(const Options& opt, const Input& in, const SimpleGraph& g, std::size_t cap) {
  check_cap(g.vertex_count(), cap, "graph homology");
  GradedRanks ranks;
  if (opt.which == "h0")
    ranks = h0_graph(g, opt.jobs);
  else if (opt.which == "h1_0")
    ranks = h1_0(g, opt.jobs);
  else if (opt.which == "h1_1")
    ranks = h1_1(g, opt.jobs);
  else
    ranks = h2_graph(g, opt.jobs);
  Report rep;
  rep.header = {"degree", "rank"};
  for (const auto& [d, r] : ranks)
    if (r != 0) rep.rows.push_back({std::to_string(d), std::to_string(r)});
  rep.json["command"] = "graph-hom";
  rep.json["homology"] = opt.which;
  rep.json["input"] = metadata(in, g.vertex_count());
  rep.json["graph6"] = to_graph6(g);
  rep.json["ranks"] = graded_json(ranks);
  return rep;
}

Report cmd_matching_complex(const Input& in, const SimpleGraph& g) {
  const auto edges = g.edges();
  const auto x = matching_complex(g);
  const auto f = x.f_vector();
  const auto h = trimmed(homology_ranks(x));
  Report rep;
  rep.header = {"dim", "faces", "homology"};
  for (std::size_t d = 0; d < std::max(f.size(), h.size()); ++d)
    rep.rows.push_back({std::to_string(d), std::to_string(d < f.size() ? f[d] : 0),
                        std::to_string(d < h.size() ? h[d] : 0)});
  Json edge_list = Json::array();
  for (const auto& [u, v] : edges) edge_list.push_back({u, v});
  Json facets = Json::array();
  for (Simplex s : x.facets()) facets.push_back(simplex_to_string(s));
  rep.json["command"] = "matching-complex";
  rep.json["input"] = metadata(in, g.vertex_count());
  rep.json["edges"] = edge_list;
  rep.json["f_vector"] = f;
  rep.json["homology"] = h;
  rep.json["facets"] = facets;
  return rep;
}

// Lines "name graph6" or "graph6"; a graph token may also be builtin:NAME.
std::vector<std::pair<std::string, SimpleGraph>> load_corpus(const Input& in) {
  std::vector<std::pair<std::string, SimpleGraph>> out;
  if (in.builtin) {
    out.emplace_back(in.source, standard_graph(in.name, in.params));
    return out;
  }
  std::istringstream lines(in.text);
  std::size_t number = 0;
  for (std::string line; std::getline(lines, line);) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) fail(ErrorKind::parse, "corpus line " + std::to_string(number) + " has extra fields");
    const std::string name = tokens.size() == 2 ? tokens[0] : "g" + std::to_string(out.size());
    out.emplace_back(name, graph_from_token(tokens.back()));
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv_row(std::ostream& out, const Row& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
  out << '\n';
}

void render(const Report& rep, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << rep.json.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    write_csv_row(out, rep.header);
    for (const auto& row : rep.rows) write_csv_row(out, row);
    return;
  }
  std::vector<std::size_t> width(rep.header.size(), 0);
  for (std::size_t c = 0; c < rep.header.size(); ++c) width[c] = rep.header[c].size();
  for (const auto& row : rep.rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto print = [&](const Row& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out << line << '\n';
  };
  print(rep.header);
  for (const auto& row : rep.rows) print(row);
}

int cmd_dissim(const Options& opt, const Input& in, std::size_t cap, std::ostream& out) {
  const auto corpus = load_corpus(in);
  for (const auto& [name, g] : corpus) {
    check_cap(g.vertex_count(), cap, "dissimilarity");
    if (g.vertex_count() == 0) fail(ErrorKind::invalid_argument, "graph " + name + " is empty");
  }
  const auto mode = theta_mode(opt, ThetaMode::per_colouring);
  std::vector<std::vector<std::optional<ThetaLevel>>> cache(corpus.size());
  for (std::size_t a = 0; a < corpus.size(); ++a) cache[a].resize(corpus[a].second.vertex_count() + 1);
  auto level = [&](std::size_t a, std::size_t j) -> const ThetaLevel& {
    if (!cache[a][j]) cache[a][j] = theta(corpus[a].second, static_cast<int>(j), mode, opt.jobs);
    return *cache[a][j];
  };

  const std::string format = opt.format.empty() ? "csv" : opt.format;
  const Row header{"name1", "name2", "delta_num", "delta_den", "first_differing_level"};
  if (format == "csv") write_csv_row(out, header);
  Report rep;
  rep.header = header;
  Json pairs = Json::array();
  for (std::size_t a = 0; a < corpus.size(); ++a) {
    for (std::size_t b = a + 1; b < corpus.size(); ++b) {
      const std::size_t m = corpus[a].second.vertex_count();
      Dissimilarity d;
      if (m != corpus[b].second.vertex_count()) {
        d.infinite = true;
      } else {
        d.theta_equivalent = true;
        for (std::size_t j = 0; j <= m; ++j) {
          if (level(a, j) != level(b, j)) {
            d = dissimilarity_at(m, static_cast<int>(j));
            break;
          }
        }
      }
      const Row row{corpus[a].first, corpus[b].first, d.infinite ? "inf" : std::to_string(d.numerator),
                    d.infinite ? "1" : std::to_string(d.denominator),
                    d.first_level < 0 ? "none" : std::to_string(d.first_level)};
      if (format == "csv") {
        write_csv_row(out, row);
        out.flush();
      }
      rep.rows.push_back(row);
      Json entry;
      entry["name1"] = corpus[a].first;
      entry["name2"] = corpus[b].first;
      entry["delta"] = d.to_string();
      entry["infinite"] = d.infinite;
      entry["numerator"] = d.infinite ? Json() : Json(d.numerator);
      entry["denominator"] = d.infinite ? Json() : Json(d.denominator);
      entry["first_differing_level"] = d.first_level < 0 ? Json() : Json(d.first_level);
      pairs.push_back(entry);
    }
  }
  if (format == "csv") return kExitOk;
  rep.json["command"] = "dissim";
  Json meta;
  meta["source"] = in.source;
  meta["fnv1a64"] = fnv1a64(in.text);
  meta["graphs"] = corpus.size();
  rep.json["input"] = meta;
  rep.json["mode"] = mode_name(mode);
  rep.json["pairs"] = pairs;
  render(rep, format, out);
  return kExitOk;
}

// ------------------------------------------------------------ plane graphs

Json plane_metadata(const Input& in, const PlaneGraph& g) {
  Json meta = metadata(in, g.vertex_count());
  meta["edges"] = g.edge_count();
  meta["faces"] = g.face_count();
  return meta;
}

Report cmd_tait(const Input& in, const PlaneGraph& g) {
  const auto t = tait_graph(g);
  const auto colouring = tait_colouring(t);
  const auto mc = matching_complex(t.edges);
  const auto ranks = horizontal_homology(mc, colouring);
  Report rep;
  rep.header = {"i", "k", "rank"};
  for (const auto& [bg, r] : ranks)
    if (r != 0) rep.rows.push_back({std::to_string(bg.first), std::to_string(bg.second), std::to_string(r)});
  Json edges = Json::array();
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    edges.push_back({t.edges[e].first, t.edges[e].second, t.black[e] ? "black" : "white"});
  rep.json["command"] = "tait";
  rep.json["input"] = plane_metadata(in, g);
  rep.json["tait"] = {{"graph_vertices", t.graph_vertices},
                      {"faces", t.faces},
                      {"crossings", t.crossings},
                      {"edges", edges},
                      {"colouring", colouring.to_string()}};
  rep.json["ranks"] = ranks_json(ranks);
  return rep;
}

Report cmd_verify_tait(const Input& in, const PlaneGraph& g, bool& ok) {
  const auto r = verify_tait_decomposition(g);
  ok = r.ok();
  auto yes = [](bool b) { return std::string(b ? "pass" : "fail"); };
  Report rep;
  rep.header = {"check", "result"};
  rep.rows = {{"decomposition", yes(r.decomposition_ok())},
              {"weight_zero", yes(r.level0_ok())},
              {"full_filtration", yes(r.top_ok())}};
  rep.json["command"] = "verify-thm42";
  rep.json["input"] = plane_metadata(in, g);
  rep.json["lhs"] = ranks_json(r.lhs);
  rep.json["rhs"] = ranks_json(r.rhs);
  rep.json["matchings_by_size"] = r.matchings_by_size;
  rep.json["weight_zero"] = r.level0;
  rep.json["subdivision_homology"] = r.subdivision_homology;
  rep.json["full_filtration"] = r.top_filtration;
  rep.json["tait_homology"] = r.tait_homology;
  rep.json["checks"] = {{"decomposition", r.decomposition_ok()},
                        {"weight_zero", r.level0_ok()},
                        {"full_filtration", r.top_ok()}};
  rep.json["ok"] = ok;
  return rep;
}


int dispatch(Options opt, std::ostream& out) {
  const std::size_t cap = opt.cap ? *opt.cap : cube_cap_from_env();
  if (opt.jobs == 0) opt.jobs = default_jobs();
  const auto in = read_input(opt.input);
  const std::string format = opt.format.empty() ? "json" : opt.format;
  const std::string& c = opt.command;

  if (c == "dissim") return cmd_dissim(opt, in, cap, out);
  if (c == "theta" || c == "graph-hom" || c == "matching-complex") {
    const auto g = load_graph(in);
    if (c == "theta") render(cmd_theta(opt, in, g, cap), format, out);
    if (c == "graph-hom") render(cmd_graph_hom(opt, in, g, cap), format, out);
    if (c == "matching-complex") render(cmd_matching_complex(in, g), format, out);
    return kExitOk;
  }
  if (c == "tait" || c == "verify-thm42") {
    const auto g = load_plane(in);
    if (c == "tait") {
      render(cmd_tait(in, g), format, out);
      return kExitOk;
    }
    bool ok = false;
    render(cmd_verify_tait(in, g, ok), format, out);
    return ok ? kExitOk : kExitCheckFailed;
  }
  const auto x = load_complex(in);
  if (c == "horizontal") render(cmd_horizontal(opt, in, x, cap, false), format, out);
  if (c == "diagonal") render(cmd_horizontal(opt, in, x, cap, true), format, out);
  if (c == "filtered") render(cmd_filtered(opt, in, x, cap), format, out);
  if (c == "euler") render(cmd_euler(opt, in, x, cap), format, out);
  if (c == "morse") render(cmd_morse(opt, in, x, cap), format, out);
  if (c == "decompose") render(cmd_decompose(opt, in, x, cap), format, out);
  if (c == "uber") render(cmd_uber(opt, in, x, cap), format, out);
  if (c == "uber0") render(cmd_uber0(in, x), format, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-coloured filtered homology, überhomology and graph invariants over F2", "uberhom"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::size_t cap = 0;
  int level = 0;
  app.add_option("--colouring", opt.colouring, "Bits such as 100, all, elementary:i or level:j");
  auto* level_opt = app.add_option("--level", level, "Filtration level k, theta level j or uber level j");
  auto* cap_opt = app.add_option("--cap", cap, "Largest vertex count for cube computations (default UBERHOM_CAP or 20)");
  app.add_option("--jobs", opt.jobs, "Worker threads; 0 uses every core")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--mode", opt.mode, "How theta combines colourings")
      ->check(CLI::IsMember({"aggregated", "per-colouring"}));
  app.add_flag("--generators", opt.generators, "Include cycle representatives");

  const std::vector<std::pair<std::string, std::string>> complex_commands{
      {"horizontal", "Horizontal homology of a coloured complex"},
      {"diagonal", "Diagonal homology of a coloured complex"},
      {"filtered", "Homology of the weight filtration"},
      {"euler", "Graded Euler characteristic"},
      {"morse", "Check the induced matching and report critical cells"},
      {"decompose", "Split the induced matching by black vertex"},
      {"uber", "Überhomology over the colouring cube"},
      {"uber0", "Degree-zero überhomology from the star intersection"}};
  for (const auto& [name, description] : complex_commands) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("input", opt.input, "Facet file, - for stdin, or builtin:NAME[:p,q]")->required();
  }
  app.add_subcommand("theta", "Graph invariant theta at one or all levels")
      ->add_option("input", opt.input, "graph6 file, - for stdin, or builtin:NAME[:p,q]")
      ->required();
  auto* hom = app.add_subcommand("graph-hom", "Graph homologies");
  hom->add_option("which", opt.which, "h0, h1_0, h1_1 or h2")
      ->required()
      ->check(CLI::IsMember({"h0", "h1_0", "h1_1", "h2"}));
  hom->add_option("input", opt.input, "graph6 file, - for stdin, or builtin:NAME[:p,q]")->required();
  app.add_subcommand("matching-complex", "Matching complex of a graph")
      ->add_option("input", opt.input, "graph6 file, - for stdin, or builtin:NAME[:p,q]")
      ->required();
  app.add_subcommand("dissim", "Pairwise dissimilarity of a graph corpus")
      ->add_option("input", opt.input, "Lines 'name graph6' or 'graph6'")
      ->required();
  app.add_subcommand("tait", "Horizontal homology of the Tait matching complex")
      ->add_option("input", opt.input, "Rotation file, - for stdin, or builtin:cycle|path|wheel:n")
      ->required();
  app.add_subcommand("verify-thm42", "Check the Tait decomposition of a plane graph")
      ->add_option("input", opt.input, "Rotation file, - for stdin, or builtin:cycle|path|wheel:n")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  opt.command = app.get_subcommands().front()->get_name();
  if (level_opt->count() > 0) opt.level = level;
  if (cap_opt->count() > 0) opt.cap = cap;

  try {
    return dispatch(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace uberhom::cli
