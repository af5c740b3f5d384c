#pragma once

// Curve neighborhoods Gamma_d(X(w)) of Schubert varieties, computed both by
// budgeted search in the moment graph and by closed form.

#include <string>
#include <vector>

#include "ifodd/moment_graph.hpp"
#include "ifodd/weyl.hpp"

namespace ifodd {

/// X(v1) u ... u X(vs), stored as the Bruhat antichain {v1, ..., vs} in
/// canonical (length, rank) order.
class SchubertUnion {
 public:
  /// Keeps the Bruhat-maximal elements of labels. Throws std::domain_error if
  /// labels is empty or mixes ranks.
  static SchubertUnion maximal_of(std::vector<FlagLabel> labels);
  static SchubertUnion single(const FlagLabel& w) { return maximal_of({w}); }

  const std::vector<FlagLabel>& components() const { return components_; }
  int n() const { return components_.front().n; }

  /// True iff u lies in the union, i.e. u <= some component.
  bool contains(const FlagLabel& u) const;

  friend bool operator==(const SchubertUnion&, const SchubertUnion&) = default;

 private:
  std::vector<FlagLabel> components_;
};

std::string to_string(const SchubertUnion& U);  // "c1, c2, ..."

/// Inclusion of varieties: every component of U lies below some component of V.
bool union_leq(const SchubertUnion& U, const SchubertUnion& V);

/// Maximal vertices reachable from the down-set of w by a moment-graph chain
/// of degree <= d.
SchubertUnion gamma_bfs(const MomentGraph& g, const FlagLabel& w, Degree d);
SchubertUnion gamma_bfs(const FlagLabel& w, Degree d);

enum class ClosedFormVariant {
  AsStated,
  /// Adds X(1|bar 2) to the (0, d2 >= 1) neighborhood of (2|b). (1|2) lies in
  /// X(2|b) and reaches (1|bar 2) along a degree (0,1) edge, which is not
  /// below (2|bar 3).
  DownSetCorrected,
};

/// Closed-form curve neighborhood by degree regime:
///   (0,0)          X(a|b)
///   (d1>=1, 0)     X(a|b) if a > b, else X(b|a)
///   (0, d2>=1)     X(a|bar3) if a in {2, bar2}, else X(a|bar2)
///   (d1>=1, 1)     X(bar3|2) u X(bar2|1) for (1|2),(2|1); X(bar2|bar3) if
///                  bar2 in {a,b}; X(bar2|max(a,b)) otherwise
///   (d1>=1, d2>=2) X(bar2|bar3)
SchubertUnion gamma_closed_form(const FlagLabel& w, Degree d,
                                ClosedFormVariant variant = ClosedFormVariant::AsStated);

struct CrossCheckMismatch {
  FlagLabel w;
  Degree d;
  SchubertUnion by_search;
  SchubertUnion closed_form;
};

struct CrossCheckReport {
  int n = 2;
  Degree dmax;
  std::size_t cells = 0;
  std::vector<CrossCheckMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares gamma_bfs against gamma_closed_form on every vertex and every
/// (0,0) <= d <= dmax.
CrossCheckReport cross_check(int n, Degree dmax, ClosedFormVariant variant = ClosedFormVariant::AsStated);

}  // namespace ifodd
