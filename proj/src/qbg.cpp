#include "ifodd/qbg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace ifodd {

ChernData chern_data(int n) {
  require_rank(n);
  ChernData c;
  c.a1 = 2;
  c.a2 = 2 * n - 1;
  c.div1 = {barred(3), barred(2), n};
  c.div2 = n == 2 ? FlagLabel{barred(2), plain(3), n} : FlagLabel{barred(2), barred(4), n};
  c.fano_index = std::gcd(c.a1, c.a2);
  return c;
}

int quantum_length_gap(const ChernData& c, Degree d) { return c.a1 * d.d1 + c.a2 * d.d2 - 1; }

bool QBGraph::has_edge(const FlagLabel& u, const FlagLabel& v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const QBEdge& e) { return e.u == u && e.v == v; });
}

std::vector<std::vector<std::size_t>> QBGraph::successors() const {
  std::vector<std::vector<std::size_t>> succ(vertices.size());
  for (const auto& e : edges) succ[index(e.u)].push_back(index(e.v));
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return succ;
}

namespace {

struct Level {
  std::vector<FlagLabel> labels;
  std::vector<int> lengths;
};

Level level_data(int n) {
  Level lv;
  lv.labels = enumerate_labels(n);
  for (const auto& w : lv.labels) lv.lengths.push_back(length(w));
  return lv;
}

void sort_edges(QBGraph& g) {
  auto key = [&](const QBEdge& e) {
    const Degree d = e.quantum.value_or(Degree{-1, -1});
    return std::tuple{g.index(e.u), g.index(e.v), d.d1, d.d2};
  };
  std::sort(g.edges.begin(), g.edges.end(), [&](const QBEdge& x, const QBEdge& y) { return key(x) < key(y); });
}

}  // namespace

std::vector<QBEdge> classical_edges_via_unified_rule(int n) {
  // d = (0,0): Gamma is X(u) itself and the length gap is -1.
  const Level lv = level_data(n);
  const ChernData c = chern_data(n);
  std::vector<QBEdge> out;
  for (std::size_t i = 0; i < lv.labels.size(); ++i) {
    const SchubertUnion gamma = gamma_closed_form(lv.labels[i], Degree{});
    for (std::size_t j = 0; j < lv.labels.size(); ++j)
      if (lv.lengths[j] - lv.lengths[i] == quantum_length_gap(c, Degree{}) && gamma.contains(lv.labels[j]))
        out.push_back({lv.labels[i], lv.labels[j], std::nullopt});
  }
  return out;
}

QBGraph build_qbg(int n, QuantumRule rule, ClosedFormVariant variant) {
  const Level lv = level_data(n);
  const ChernData c = chern_data(n);
  const int max_length = length(top_label(n));
  QBGraph g;
  g.n = n;
  g.vertices = lv.labels;
  g.index = LabelIndex(g.vertices);
  const std::size_t size = lv.labels.size();

  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (lv.lengths[j] == lv.lengths[i] - 1 && bruhat_leq(lv.labels[j], lv.labels[i]))
        g.edges.push_back({lv.labels[i], lv.labels[j], std::nullopt});

  for (int d1 = 0; quantum_length_gap(c, {d1, 0}) <= max_length; ++d1)
    for (int d2 = 0; quantum_length_gap(c, {d1, d2}) <= max_length; ++d2) {
      const Degree d{d1, d2};
      if (d == Degree{}) continue;
      const int gap = quantum_length_gap(c, d);
      for (std::size_t i = 0; i < size; ++i) {
        const SchubertUnion gamma = gamma_closed_form(lv.labels[i], d, variant);
        for (std::size_t j = 0; j < size; ++j) {
          if (lv.lengths[j] - lv.lengths[i] != gap) continue;
          const FlagLabel& v = lv.labels[j];
          const auto& comps = gamma.components();
          const bool accepted = rule == QuantumRule::StrictComponent
                                    ? std::find(comps.begin(), comps.end(), v) != comps.end()
                                    : gamma.contains(v);
          if (accepted) g.edges.push_back({lv.labels[i], v, d});
        }
      }
    }
  sort_edges(g);
  return g;
}

Digraph to_digraph(const QBGraph& g) { return {g.successors()}; }

namespace {

std::vector<bool> reachable(const std::vector<std::vector<std::size_t>>& succ, std::size_t root) {
  std::vector<bool> seen(succ.size(), false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : succ[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  const std::size_t size = g.succ.size();
  if (size <= 1) return true;
  std::vector<std::vector<std::size_t>> pred(size);
  for (std::size_t v = 0; v < size; ++v)
    for (std::size_t w : g.succ[v]) pred[w].push_back(v);
  const auto fwd = reachable(g.succ, 0);
  const auto bwd = reachable(pred, 0);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

bool is_strongly_connected(const QBGraph& g) { return is_strongly_connected(to_digraph(g)); }

int cycle_length_gcd(const Digraph& g) {
  if (g.succ.empty() || !is_strongly_connected(g))
    throw std::domain_error("cycle_length_gcd: graph is not strongly connected");
  std::vector<int> depth(g.succ.size(), -1);
  std::queue<std::size_t> queue;
  depth[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t w : g.succ[v])
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        queue.push(w);
      }
  }
  int period = 0;
  for (std::size_t v = 0; v < g.succ.size(); ++v)
    for (std::size_t w : g.succ[v]) period = std::gcd(period, std::abs(depth[v] + 1 - depth[w]));
  // An edgeless single vertex has no cycles; report 0.
  return period;
}

int cycle_length_gcd(const QBGraph& g) { return cycle_length_gcd(to_digraph(g)); }

std::vector<std::vector<FlagLabel>> witness_cycles(int n) {
  require_rank(n);
  std::vector<std::vector<FlagLabel>> cycles;
  cycles.push_back({{plain(1), plain(2), n}, {plain(2), plain(1), n}});
  std::vector<FlagLabel> long_cycle{{plain(1), plain(2), n}};
  for (int k = 3; k <= n + 1; ++k) long_cycle.push_back({plain(1), barred(k), n});
  for (int k = n + 1; k >= 3; --k) long_cycle.push_back({plain(1), plain(k), n});
  cycles.push_back(std::move(long_cycle));
  return cycles;
}

PropertyOVerdict property_o_verdict(const QBGraph& g) {
  PropertyOVerdict verdict;
  verdict.n = g.n;
  verdict.fano_index = chern_data(g.n).fano_index;
  verdict.strongly_connected = is_strongly_connected(g);
  verdict.gcd = verdict.strongly_connected ? cycle_length_gcd(g) : 0;
  verdict.holds = verdict.strongly_connected && verdict.gcd == verdict.fano_index;
  verdict.witness_cycles = witness_cycles(g.n);
  for (const auto& cycle : verdict.witness_cycles)
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const FlagLabel& from = cycle[k];
      const FlagLabel& to = cycle[(k + 1) % cycle.size()];
      if (!g.has_edge(from, to))
        throw VerificationError("witness cycle edge " + to_string(from) + " -> " + to_string(to) +
                                " missing for n=" + std::to_string(g.n));
    }
  return verdict;
}

PropertyOVerdict property_o_verdict(int n, QuantumRule rule) { return property_o_verdict(build_qbg(n, rule)); }

std::vector<Discrepancy> moment_discrepancies(const QBGraph& g, const MomentGraph& mg) {
  std::set<std::pair<std::size_t, std::size_t>> joined;
  for (const auto& e : mg.edges) {
    const std::size_t a = g.index(e.u), b = g.index(e.v);
    joined.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<Discrepancy> out;
  for (const auto& e : g.edges) {
    if (e.is_classical()) continue;
    const std::size_t a = g.index(e.u), b = g.index(e.v);
    if (!joined.contains({std::min(a, b), std::max(a, b)})) out.push_back({e.u, e.v, *e.quantum});
  }
  return out;
}

std::vector<Discrepancy> moment_discrepancies(int n) {
  return moment_discrepancies(build_qbg(n), build_moment_graph(n));
}

std::string to_dot(const QBGraph& g) {
  auto colour = [](const QBEdge& e) -> const char* {
    if (e.is_classical()) return "black";
    const Degree d = *e.quantum;
    if (d == Degree{1, 0}) return "green";
    if (d == Degree{0, 1}) return "orange";
    if (d == Degree{1, 1}) return "blue";
    return "purple";
  };
  std::ostringstream os;
  os << "digraph quantum_bruhat_graph_n" << g.n << " {\n";
  os << "  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& w : g.vertices) os << "  \"" << to_string(w) << "\" [label=\"(" << to_string(w) << ")\"];\n";
  for (const auto& e : g.edges) {
    os << "  \"" << to_string(e.u) << "\" -> \"" << to_string(e.v) << "\" [color=" << colour(e);
    if (e.quantum) os << ", label=\"" << to_string(*e.quantum) << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ifodd
