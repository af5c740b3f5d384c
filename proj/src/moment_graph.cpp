#include "ifodd/moment_graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ifodd {

std::string to_string(Degree d) { return std::to_string(d.d1) + "," + std::to_string(d.d2); }

Degree parse_degree(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("degree must be d1,d2");
  auto parse = [](std::string_view s) {
    int value = -1;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || value < 0)
      throw std::invalid_argument("degree entries must be nonnegative integers");
    return value;
  };
  return {parse(text.substr(0, comma)), parse(text.substr(comma + 1))};
}

Degree degree_of_root(const Root& alpha) {
  if (alpha.in_levi()) throw std::domain_error("root " + to_string(alpha) + " lies in R+_P");
  if (alpha.i == 1 && alpha.j == 2) {
    if (alpha.kind == Root::Kind::Diff) return {1, 0};
    if (alpha.kind == Root::Kind::Sum) return {1, 2};
  }
  return alpha.i == 1 ? Degree{1, 1} : Degree{0, 1};
}

Degree chain_degree(std::span<const Root> roots) {
  int n10 = 0, n01 = 0, n11 = 0, n12 = 0;
  for (const Root& r : roots) {
    const Degree d = degree_of_root(r);
    if (d == Degree{1, 0}) ++n10;
    else if (d == Degree{0, 1}) ++n01;
    else if (d == Degree{1, 1}) ++n11;
    else ++n12;
  }
  return Degree{n10, n01} + Degree{n11, n11} + Degree{n12, 2 * n12};
}

std::vector<std::vector<std::pair<std::size_t, Degree>>> MomentGraph::adjacency() const {
  std::vector<std::vector<std::pair<std::size_t, Degree>>> adj(vertices.size());
  for (const auto& e : edges) {
    const std::size_t iu = index(e.u), iv = index(e.v);
    adj[iu].push_back({iv, e.deg});
    adj[iv].push_back({iu, e.deg});
  }
  return adj;
}

namespace {

MomentGraph build_on(int n, std::vector<FlagLabel> vertices) {
  MomentGraph g;
  g.n = n;
  g.vertices = std::move(vertices);
  g.index = LabelIndex(g.vertices);
  const auto roots = moment_roots(n);
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    const FlagLabel& w = g.vertices[k];
    for (const Root& alpha : roots) {
      const auto target = reflect_even(w, alpha);
      if (!target || !g.index.contains(*target)) continue;
      if (g.index(*target) > k) g.edges.push_back({w, *target, degree_of_root(alpha), alpha});
    }
  }
  return g;
}

}  // namespace

MomentGraph build_moment_graph(int n) { return build_on(n, enumerate_labels(n)); }

MomentGraph build_even_moment_graph(int n) { return build_on(n, enumerate_even_labels(n)); }

MomentGraph restrict_to_odd(const MomentGraph& even) {
  MomentGraph g;
  g.n = even.n;
  for (const auto& w : even.vertices)
    if (w.is_valid()) g.vertices.push_back(w);
  g.index = LabelIndex(g.vertices);
  for (const auto& e : even.edges)
    if (g.index.contains(e.u) && g.index.contains(e.v)) g.edges.push_back(e);
  return g;
}

namespace {

const char* degree_colour(Degree d) {
  if (d == Degree{1, 0}) return "green";
  if (d == Degree{0, 1}) return "orange";
  if (d == Degree{1, 1}) return "blue";
  return "purple";
}

}  // namespace

std::string to_dot(const MomentGraph& g, std::optional<Degree> only_degree) {
  std::ostringstream os;
  os << "graph moment_graph_n" << g.n << " {\n";
  os << "  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& w : g.vertices)
    os << "  \"" << to_string(w) << "\" [label=\"(" << to_string(w) << ")\"];\n";
  for (const auto& e : g.edges) {
    if (only_degree && e.deg != *only_degree) continue;
    os << "  \"" << to_string(e.u) << "\" -- \"" << to_string(e.v) << "\" [color=" << degree_colour(e.deg)
       << ", label=\"" << to_string(e.deg) << "\", tooltip=\"" << to_string(e.root) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ifodd
