#include "ifodd/lattice.hpp"

#include <algorithm>
#include <array>

namespace ifodd {

bool FinitePoset::is_partial_order() const {
  const std::size_t m = size();
  for (const auto& row : leq)
    if (row.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (!leq[i][i]) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) return false;
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (leq[j][k] && !leq[i][k]) return false;
    }
  }
  return true;
}

std::optional<std::size_t> FinitePoset::join(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> upper;
  for (std::size_t z = 0; z < size(); ++z)
    if (leq[x][z] && leq[y][z]) upper.push_back(z);
  for (std::size_t z : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](std::size_t u) { return leq[z][u]; })) return z;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::meet(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < size(); ++z)
    if (leq[z][x] && leq[z][y]) lower.push_back(z);
  for (std::size_t z : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t l) { return leq[l][z]; })) return z;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j || !leq[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < size() && !between; ++k)
        between = k != i && k != j && leq[i][k] && leq[k][j];
      if (!between) out.push_back({i, j});
    }
  return out;
}

FinitePoset FinitePoset::from_covers(std::size_t size,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  FinitePoset P;
  P.leq.assign(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) P.leq[i][i] = true;
  for (auto [i, j] : covers) P.leq[i][j] = true;
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (P.leq[i][k] && P.leq[k][j]) P.leq[i][j] = true;
  return P;
}

// Element order in both: 0, a, b, c, 1.
FinitePoset m3() { return FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }
FinitePoset n5() { return FinitePoset::from_covers(5, {{0, 3}, {3, 1}, {1, 4}, {0, 2}, {2, 4}}); }

bool is_lattice(const FinitePoset& P) {
  if (!P.is_partial_order()) return false;
  for (std::size_t x = 0; x < P.size(); ++x)
    for (std::size_t y = x + 1; y < P.size(); ++y)
      if (!P.join(x, y) || !P.meet(x, y)) return false;
  return true;
}

bool satisfies_distributive_law(const FinitePoset& L) {
  const std::size_t m = L.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        const std::size_t lhs = *L.join(a, *L.meet(b, c));
        const std::size_t rhs = *L.meet(*L.join(a, b), *L.join(a, c));
        if (lhs != rhs) return false;
      }
  return true;
}

namespace {

bool incomparable(const FinitePoset& L, std::size_t x, std::size_t y) { return !L.leq[x][y] && !L.leq[y][x]; }
bool strictly_less(const FinitePoset& L, std::size_t x, std::size_t y) { return x != y && L.leq[x][y]; }

// {z, a, b, c, o}: z < a,b,c < o, pairwise incomparable middles whose
// joins are o and meets are z in L.
bool is_m3(const FinitePoset& L, std::size_t z, std::size_t a, std::size_t b, std::size_t c, std::size_t o) {
  const std::array<std::size_t, 3> mid{a, b, c};
  for (std::size_t x : mid)
    if (!strictly_less(L, z, x) || !strictly_less(L, x, o)) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!incomparable(L, mid[i], mid[j])) return false;
      if (L.join(mid[i], mid[j]) != o || L.meet(mid[i], mid[j]) != z) return false;
    }
  return true;
}

// {z, a, b, c, o}: z < c < a < o, z < b < o, b incomparable with a and c,
// and b closes up to o and z against the chain.
bool is_n5(const FinitePoset& L, std::size_t z, std::size_t a, std::size_t b, std::size_t c, std::size_t o) {
  if (!strictly_less(L, z, c) || !strictly_less(L, c, a) || !strictly_less(L, a, o)) return false;
  if (!strictly_less(L, z, b) || !strictly_less(L, b, o)) return false;
  if (!incomparable(L, a, b) || !incomparable(L, b, c)) return false;
  return L.join(b, c) == o && L.join(a, b) == o && L.meet(a, b) == z && L.meet(b, c) == z;
}

}  // namespace

bool has_m3_or_n5_sublattice(const FinitePoset& L) {
  const std::size_t m = L.size();
  for (std::size_t z = 0; z < m; ++z)
    for (std::size_t o = 0; o < m; ++o) {
      if (!strictly_less(L, z, o)) continue;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          for (std::size_t c = 0; c < m; ++c) {
            if (a == b || b == c || a == c) continue;
            if (is_m3(L, z, a, b, c, o) || is_n5(L, z, a, b, c, o)) return true;
          }
    }
  return false;
}

bool is_distributive(const FinitePoset& L) {
  if (!is_lattice(L)) throw std::domain_error("is_distributive: not a lattice");
  const bool by_law = satisfies_distributive_law(L);
  const bool by_sublattices = !has_m3_or_n5_sublattice(L);
  if (by_law != by_sublattices)
    throw VerificationError("distributive law and M3/N5 criterion disagree");
  return by_law;
}

std::string to_string(LatticeShape s) {
  switch (s) {
    case LatticeShape::Trivial: return "trivial";
    case LatticeShape::Chain2: return "chain2";
    case LatticeShape::Chain3Via01: return "chain3-via-01";
    case LatticeShape::Chain3Via10: return "chain3-via-10";
    case LatticeShape::Chain4: return "chain4";
    case LatticeShape::Diamond: return "diamond";
    case LatticeShape::DiamondPlusTop: return "diamond-plus-top";
  }
  return "?";
}

std::vector<LatticeShape> matching_shapes(const FlagLabel& base) {
  const BarValue a = base.a, b = base.b;
  const BarValue bar2 = barred(2), bar3 = barred(3);
  auto outside = [&](BarValue v) { return v != bar2 && v != bar3; };
  std::vector<LatticeShape> out;
  if (base == top_label(base.n)) out.push_back(LatticeShape::Trivial);
  if (base != top_label(base.n) && (a == bar2 || (a == bar3 && b == bar2))) out.push_back(LatticeShape::Chain2);
  if (a == bar3 && b != bar2) out.push_back(LatticeShape::Chain3Via01);
  if (b == bar2 && a != bar3) out.push_back(LatticeShape::Chain3Via10);
  if (outside(a) && outside(b) && a > b) out.push_back(LatticeShape::Chain4);
  if (b == bar3 && a != bar2) out.push_back(LatticeShape::Diamond);
  if (outside(a) && outside(b) && a < b) out.push_back(LatticeShape::DiamondPlusTop);
  return out;
}

LatticeShape predicted_shape(const FlagLabel& base) {
  const auto shapes = matching_shapes(base);
  if (shapes.size() != 1)
    throw VerificationError("shape predicates do not single out " + to_string(base));
  return shapes.front();
}

const std::vector<Degree>& representative_degrees() {
  static const std::vector<Degree> degrees{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}};
  return degrees;
}

CNLattice build_cn_lattice(const FlagLabel& w, ClosedFormVariant variant) {
  CNLattice L;
  L.base = w;
  for (Degree d : representative_degrees()) {
    SchubertUnion g = gamma_closed_form(w, d, variant);
    if (std::find(L.elements.begin(), L.elements.end(), g) != L.elements.end()) continue;
    L.elements.push_back(std::move(g));
    L.witnesses.push_back(d);
  }
  const std::size_t m = L.elements.size();
  L.order.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) L.order.leq[i][j] = union_leq(L.elements[i], L.elements[j]);
  return L;
}

namespace {

LatticeShape shape_from_order(const CNLattice& L) {
  const FinitePoset& P = L.order;
  const std::size_t m = P.size();
  std::size_t comparable_pairs = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!incomparable(P, i, j)) ++comparable_pairs;
  const bool chain = comparable_pairs == m * (m - 1) / 2;
  const auto fail = [&]() -> LatticeShape {
    throw VerificationError("unrecognised curve-neighborhood lattice at " + to_string(L.base));
  };

  if (m == 1) return LatticeShape::Trivial;
  if (m == 2 && chain) return LatticeShape::Chain2;
  if (m == 3 && chain) {
    if (L.witnesses[1] == Degree{0, 1}) return LatticeShape::Chain3Via01;
    if (L.witnesses[1] == Degree{1, 0}) return LatticeShape::Chain3Via10;
    return fail();
  }
  if (m == 4 && chain) return LatticeShape::Chain4;
  // Diamond: a single incomparable pair, and those are the two atoms. The
  // five-element case has one more element above their join.
  std::size_t atoms = 0;
  for (auto [lo, hi] : P.hasse_edges())
    if (lo == 0) ++atoms;
  if (comparable_pairs + 1 == m * (m - 1) / 2 && atoms == 2) {
    if (m == 4) return LatticeShape::Diamond;
    if (m == 5) return LatticeShape::DiamondPlusTop;
  }
  return fail();
}

}  // namespace

LatticeShape classify_shape(const CNLattice& L) {
  const LatticeShape observed = shape_from_order(L);
  const LatticeShape expected = predicted_shape(L.base);
  if (observed != expected)
    throw VerificationError("lattice at " + to_string(L.base) + " has shape " + to_string(observed) +
                            " but the label predicts " + to_string(expected));
  return observed;
}

}  // namespace ifodd
