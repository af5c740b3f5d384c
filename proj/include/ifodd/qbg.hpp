#pragma once

// The combinatorial quantum Bruhat graph and the graph-theoretic side of
// Property O: strong connectivity and the period (gcd of cycle lengths).

#include <optional>
#include <string>
#include <vector>

#include "ifodd/curve_nbhd.hpp"
#include "ifodd/moment_graph.hpp"

namespace ifodd {

/// c_1 = a1 [X(div1)] + a2 [X(div2)].
struct ChernData {
  int a1 = 2;
  int a2 = 3;
  FlagLabel div1;
  FlagLabel div2;
  int fano_index = 1;
};

ChernData chern_data(int n);

/// How the quantum rule treats v relative to Gamma_d(X(u)).
enum class QuantumRule {
  SubComponent,  // v <= some component (reproduces the n=2 figure)
  StrictComponent,  // v is itself a component
};

struct QBEdge {
  FlagLabel u;
  FlagLabel v;
  std::optional<Degree> quantum;  // nullopt for a classical edge

  bool is_classical() const { return !quantum.has_value(); }
};

struct QBGraph {
  int n = 2;
  std::vector<FlagLabel> vertices;
  std::vector<QBEdge> edges;
  LabelIndex index;

  bool has_edge(const FlagLabel& u, const FlagLabel& v) const;
  std::vector<std::vector<std::size_t>> successors() const;
};

/// Length change required of a quantum edge of degree d.
int quantum_length_gap(const ChernData& c, Degree d);

/// Neighborhoods come from gamma_closed_form(., ., variant).
QBGraph build_qbg(int n, QuantumRule rule = QuantumRule::SubComponent,
                  ClosedFormVariant variant = ClosedFormVariant::AsStated);

/// Edges u -> v from the unified quantum rule evaluated at d = (0,0).
std::vector<QBEdge> classical_edges_via_unified_rule(int n);

/// Plain directed graph on 0..size-1, used for the period computation.
struct Digraph {
  std::vector<std::vector<std::size_t>> succ;
};

Digraph to_digraph(const QBGraph& g);

bool is_strongly_connected(const Digraph& g);
bool is_strongly_connected(const QBGraph& g);

/// Period of a strongly connected digraph. Throws std::domain_error if the
/// graph is not strongly connected.
int cycle_length_gcd(const Digraph& g);
int cycle_length_gcd(const QBGraph& g);

struct PropertyOVerdict {
  int n = 2;
  bool strongly_connected = false;
  int gcd = 0;
  int fano_index = 1;
  bool holds = false;
  std::vector<std::vector<FlagLabel>> witness_cycles;  // closed: last vertex returns to first
};

/// The 2-cycle (1|2) -> (2|1) -> (1|2) and the (2n-1)-cycle through (1|3bar).
std::vector<std::vector<FlagLabel>> witness_cycles(int n);

/// Throws VerificationError if a witness cycle edge is missing from g.
PropertyOVerdict property_o_verdict(const QBGraph& g);
PropertyOVerdict property_o_verdict(int n, QuantumRule rule = QuantumRule::SubComponent);

struct Discrepancy {
  FlagLabel u;
  FlagLabel v;
  Degree d;
};

/// Quantum edges whose endpoints are not joined by any single moment-graph
/// edge.
std::vector<Discrepancy> moment_discrepancies(const QBGraph& g, const MomentGraph& mg);
std::vector<Discrepancy> moment_discrepancies(int n);

std::string to_dot(const QBGraph& g);

}  // namespace ifodd
