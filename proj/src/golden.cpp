#include "ifodd/golden.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ifodd/curve_nbhd.hpp"
#include "ifodd/lattice.hpp"

namespace ifodd::golden {

std::string Diff::summary() const {
  std::ostringstream os;
  for (const auto& m : missing) os << "  missing:    " << m << "\n";
  for (const auto& u : unexpected) os << "  unexpected: " << u << "\n";
  return os.str();
}

std::vector<std::string> records(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string word, joined;
    while (words >> word) joined += (joined.empty() ? "" : " ") + word;
    if (!joined.empty() && joined.front() != '#') out.push_back(joined);
  }
  return out;
}

namespace {

Diff compare(std::vector<std::string> expected, std::vector<std::string> actual) {
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  Diff d;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(d.missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(d.unexpected));
  return d;
}

// Orders the endpoints of an undirected edge canonically.
std::string undirected(const FlagLabel& u, const FlagLabel& v, Degree d) {
  const bool swap = label_key(v) < label_key(u);
  return to_string(swap ? v : u) + " " + to_string(swap ? u : v) + " " + to_string(d);
}

void require_n2(int n) {
  if (n != 2) throw std::domain_error("golden data exists only for n=2");
}

}  // namespace

Diff diff_moment_graph(const MomentGraph& g) {
  require_n2(g.n);
  std::vector<std::string> expected;
  for (const auto& rec : records(moment_graph_text())) {
    std::istringstream in(rec);
    std::string u, v, d;
    in >> u >> v >> d;
    expected.push_back(undirected(parse_label(u, 2), parse_label(v, 2), parse_degree(d)));
  }
  std::vector<std::string> actual;
  for (const auto& e : g.edges) actual.push_back(undirected(e.u, e.v, e.deg));
  return compare(std::move(expected), std::move(actual));
}

Diff diff_qbg(const QBGraph& g) {
  require_n2(g.n);
  std::vector<std::string> actual;
  for (const auto& e : g.edges)
    actual.push_back(to_string(e.u) + " " + to_string(e.v) + " " +
                     (e.quantum ? to_string(*e.quantum) : std::string("classical")));
  return compare(records(qbg_text()), std::move(actual));
}

Diff diff_neighborhoods() {
  const MomentGraph g = build_moment_graph(2);
  std::vector<std::string> expected, actual;
  for (const auto& rec : records(neighborhoods_text())) {
    std::istringstream in(rec);
    std::string w_text, d_text, colon, label;
    in >> w_text >> d_text >> colon;
    std::vector<FlagLabel> comps;
    while (in >> label) comps.push_back(parse_label(label, 2));
    const FlagLabel w = parse_label(w_text, 2);
    const Degree d = parse_degree(d_text);
    const std::string head = to_string(w) + " " + to_string(d) + " : ";
    expected.push_back("search " + head + to_string(SchubertUnion::maximal_of(comps)));
    expected.push_back("closed " + head + to_string(SchubertUnion::maximal_of(comps)));
    actual.push_back("search " + head + to_string(gamma_bfs(g, w, d)));
    actual.push_back("closed " + head + to_string(gamma_closed_form(w, d)));
  }
  return compare(std::move(expected), std::move(actual));
}

Diff diff_lattice_shapes() {
  std::vector<std::string> actual;
  for (const auto& w : enumerate_labels(2)) {
    std::string shape;
    try {
      shape = to_string(classify_shape(build_cn_lattice(w)));
    } catch (const VerificationError& e) {
      shape = std::string("error(") + e.what() + ")";
    }
    actual.push_back(to_string(w) + " " + shape);
  }
  return compare(records(lattice_shapes_text()), std::move(actual));
}

}  // namespace ifodd::golden
