#include "ifodd/export.hpp"

#include <iomanip>
#include <sstream>

namespace ifodd {

using nlohmann::json;

namespace {

json labels_array(const std::vector<FlagLabel>& labels) {
  json out = json::array();
  for (const auto& w : labels) out.push_back(to_string(w));
  return out;
}

json degree_json(Degree d) { return json::array({d.d1, d.d2}); }

}  // namespace

json labels_json(int n) {
  json rows = json::array();
  for (const auto& w : enumerate_labels(n)) rows.push_back({{"label", to_string(w)}, {"length", length(w)}});
  return {{"version", kJsonSchemaVersion}, {"n", n}, {"labels", rows}};
}

std::string labels_table(int n) {
  std::ostringstream os;
  for (const auto& w : enumerate_labels(n)) os << std::left << std::setw(8) << to_string(w) << length(w) << "\n";
  return os.str();
}

json to_json(const MomentGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"u", to_string(e.u)}, {"v", to_string(e.v)}, {"deg", degree_json(e.deg)}, {"root", to_string(e.root)}});
  return {{"version", kJsonSchemaVersion}, {"n", g.n}, {"vertices", labels_array(g.vertices)}, {"edges", edges}};
}

std::string to_table(const MomentGraph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges)
    os << std::left << std::setw(8) << to_string(e.u) << std::setw(8) << to_string(e.v) << std::setw(6)
       << to_string(e.deg) << to_string(e.root) << "\n";
  return os.str();
}

json nbhd_json(const FlagLabel& w, Degree d, const SchubertUnion& gamma) {
  return {{"version", kJsonSchemaVersion},
          {"w", to_string(w)},
          {"d", degree_json(d)},
          {"components", labels_array(gamma.components())}};
}

json to_json(const CNLattice& L) {
  json elements = json::array();
  for (const auto& e : L.elements) elements.push_back(labels_array(e.components()));
  json hasse = json::array();
  for (auto [i, j] : L.order.hasse_edges()) hasse.push_back({i, j});
  json witnesses = json::array();
  for (Degree d : L.witnesses) witnesses.push_back(degree_json(d));
  return {{"version", kJsonSchemaVersion}, {"base", to_string(L.base)}, {"elements", elements},
          {"witnesses", witnesses}, {"hasse", hasse}, {"shape", to_string(classify_shape(L))}};
}

std::string to_dot(const CNLattice& L) {
  std::ostringstream os;
  os << "digraph cn_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < L.elements.size(); ++i)
    os << "  e" << i << " [label=\"" << to_string(L.elements[i]) << "\\nd=" << to_string(L.witnesses[i]) << "\"];\n";
  for (auto [i, j] : L.order.hasse_edges()) os << "  e" << i << " -> e" << j << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

std::string to_table(const CNLattice& L) {
  std::ostringstream os;
  os << to_string(L.base) << "  " << to_string(classify_shape(L)) << "\n";
  for (std::size_t i = 0; i < L.elements.size(); ++i)
    os << "  [" << i << "] d=" << to_string(L.witnesses[i]) << "  " << to_string(L.elements[i]) << "\n";
  return os.str();
}

json to_json(const PropertyOVerdict& v) {
  json cycles = json::array();
  for (const auto& c : v.witness_cycles) cycles.push_back(labels_array(c));
  return {{"n", v.n},         {"strongly_connected", v.strongly_connected}, {"gcd", v.gcd},
          {"fano_index", v.fano_index}, {"holds", v.holds}, {"witness_cycles", cycles}};
}

json to_json(const QBGraph& g, const PropertyOVerdict& v) {
  json edges = json::array();
  for (const auto& e : g.edges) {
    json row = {{"u", to_string(e.u)}, {"v", to_string(e.v)}, {"kind", e.quantum ? "quantum" : "classical"}};
    if (e.quantum) row["deg"] = degree_json(*e.quantum);
    edges.push_back(row);
  }
  return {{"version", kJsonSchemaVersion}, {"n", g.n}, {"edges", edges}, {"verdict", to_json(v)}};
}

std::string to_table(const QBGraph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges)
    os << std::left << std::setw(8) << to_string(e.u) << std::setw(8) << to_string(e.v)
       << (e.quantum ? to_string(*e.quantum) : std::string("classical")) << "\n";
  return os.str();
}

}  // namespace ifodd
