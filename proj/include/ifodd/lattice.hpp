#pragma once

// Finite posets given by a relation matrix, lattice and distributivity
// checks, and the lattice of curve neighborhoods of a Schubert variety.

#include <optional>
#include <string>
#include <vector>

#include "ifodd/curve_nbhd.hpp"

namespace ifodd {

/// leq[i][j] == true iff element i <= element j.
struct FinitePoset {
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return leq.size(); }
  bool is_partial_order() const;

  std::optional<std::size_t> join(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> meet(std::size_t x, std::size_t y) const;

  /// Cover pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  static FinitePoset from_covers(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& covers);
};

FinitePoset m3();
FinitePoset n5();

bool is_lattice(const FinitePoset& P);

/// a v (b ^ c) == (a v b) ^ (a v c) for all triples.
bool satisfies_distributive_law(const FinitePoset& L);

/// True iff some 5-element subset is a sublattice isomorphic to M3 or N5.
bool has_m3_or_n5_sublattice(const FinitePoset& L);

/// Distributivity decided both by the triple law and by forbidden
/// sublattices. Throws VerificationError if the two verdicts differ and
/// std::domain_error if L is not a lattice.
bool is_distributive(const FinitePoset& L);

enum class LatticeShape { Trivial, Chain2, Chain3Via01, Chain3Via10, Chain4, Diamond, DiamondPlusTop };

std::string to_string(LatticeShape s);

/// Every shape whose defining predicate on (a|b) holds. The predicates
/// partition the vertex set, so this has exactly one entry.
std::vector<LatticeShape> matching_shapes(const FlagLabel& base);

/// The unique entry of matching_shapes(); VerificationError otherwise.
LatticeShape predicted_shape(const FlagLabel& base);

struct CNLattice {
  FlagLabel base;
  std::vector<SchubertUnion> elements;
  FinitePoset order;
  std::vector<Degree> witnesses;  // first representative degree giving each element
};

/// Representative degrees exhausting every regime of the closed form.
const std::vector<Degree>& representative_degrees();

CNLattice build_cn_lattice(const FlagLabel& w, ClosedFormVariant variant = ClosedFormVariant::AsStated);

/// Shape read off the order structure. Throws VerificationError if it
/// disagrees with predicted_shape(L.base).
LatticeShape classify_shape(const CNLattice& L);

}  // namespace ifodd
