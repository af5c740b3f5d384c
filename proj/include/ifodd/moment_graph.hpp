#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifodd/weyl.hpp"

namespace ifodd {

/// Effective curve class (d1, d2) in H_2. Partially ordered componentwise.
struct Degree {
  int d1 = 0;
  int d2 = 0;

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr Degree operator+(Degree x, Degree y) { return {x.d1 + y.d1, x.d2 + y.d2}; }
  Degree& operator+=(Degree y) { return *this = *this + y; }
};

/// Componentwise x <= y.
constexpr bool dominated(Degree x, Degree y) { return x.d1 <= y.d1 && x.d2 <= y.d2; }
constexpr Degree join(Degree x, Degree y) {
  return {x.d1 > y.d1 ? x.d1 : y.d1, x.d2 > y.d2 ? x.d2 : y.d2};
}
/// Lexicographic; only for canonical ordering of containers.
constexpr bool lex_less(Degree x, Degree y) {
  return x.d1 != y.d1 ? x.d1 < y.d1 : x.d2 < y.d2;
}

std::string to_string(Degree d);  // "d1,d2"
Degree parse_degree(std::string_view text);

/// Degree class of a root in R+ \ R+_P.
Degree degree_of_root(const Root& alpha);

/// Sum of edge degrees along a chain, counted per degree class.
Degree chain_degree(std::span<const Root> roots);

struct MomentEdge {
  FlagLabel u;
  FlagLabel v;
  Degree deg;
  Root root;
};

struct MomentGraph {
  int n = 2;
  std::vector<FlagLabel> vertices;  // enumerate_labels order
  std::vector<MomentEdge> edges;
  LabelIndex index;

  /// Per vertex: (neighbor index, edge degree), both directions.
  std::vector<std::vector<std::pair<std::size_t, Degree>>> adjacency() const;
};

MomentGraph build_moment_graph(int n);

/// The moment graph of the even flag manifold IF(1,2; C^{2n+2}) on all of W^P.
MomentGraph build_even_moment_graph(int n);

/// Full subgraph on the odd vertices.
MomentGraph restrict_to_odd(const MomentGraph& even);

/// Graphviz rendering; one colour per degree class. When only_degree is
/// set, edges of other degrees are omitted (all vertices are kept).
std::string to_dot(const MomentGraph& g, std::optional<Degree> only_degree = std::nullopt);

}  // namespace ifodd
