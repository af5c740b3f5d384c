#include "ifodd/curve_nbhd.hpp"

#include <algorithm>
#include <deque>

namespace ifodd {

SchubertUnion SchubertUnion::maximal_of(std::vector<FlagLabel> labels) {
  if (labels.empty()) throw std::domain_error("a Schubert union needs at least one component");
  const int n = labels.front().n;
  for (const auto& w : labels)
    if (w.n != n) throw std::domain_error("Schubert union mixes ranks");
  std::sort(labels.begin(), labels.end(), label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  SchubertUnion out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    bool dominated_by_other = false;
    for (std::size_t j = i + 1; j < labels.size() && !dominated_by_other; ++j)
      dominated_by_other = bruhat_leq(labels[i], labels[j]);
    if (!dominated_by_other) out.components_.push_back(labels[i]);
  }
  return out;
}

bool SchubertUnion::contains(const FlagLabel& u) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const FlagLabel& v) { return bruhat_leq(u, v); });
}

std::string to_string(const SchubertUnion& U) {
  std::string out;
  for (const auto& w : U.components()) {
    if (!out.empty()) out += ", ";
    out += to_string(w);
  }
  return out;
}

bool union_leq(const SchubertUnion& U, const SchubertUnion& V) {
  if (U.n() != V.n()) throw std::domain_error("union_leq: rank mismatch");
  return std::all_of(U.components().begin(), U.components().end(),
                     [&](const FlagLabel& u) { return V.contains(u); });
}

SchubertUnion gamma_bfs(const MomentGraph& g, const FlagLabel& w, Degree d) {
  if (d.d1 < 0 || d.d2 < 0) throw std::domain_error("degree must be nonnegative");
  const auto adj = g.adjacency();
  // Pareto frontier of spent degrees per vertex.
  std::vector<std::vector<Degree>> frontier(g.vertices.size());
  std::deque<std::pair<std::size_t, Degree>> queue;

  auto offer = [&](std::size_t v, Degree spent) {
    auto& f = frontier[v];
    for (Degree old : f)
      if (dominated(old, spent)) return;
    std::erase_if(f, [&](Degree old) { return dominated(spent, old); });
    f.push_back(spent);
    queue.push_back({v, spent});
  };

  for (const auto& u : down_set(w)) offer(g.index(u), Degree{});
  while (!queue.empty()) {
    const auto [v, spent] = queue.front();
    queue.pop_front();
    // A state may have been superseded after it was queued; expanding it is
    // harmless because offer() filters dominated successors.
    for (const auto& [next, deg] : adj[v]) {
      const Degree total = spent + deg;
      if (dominated(total, d)) offer(next, total);
    }
  }

  std::vector<FlagLabel> reached;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (!frontier[v].empty()) reached.push_back(g.vertices[v]);
  return SchubertUnion::maximal_of(std::move(reached));
}

SchubertUnion gamma_bfs(const FlagLabel& w, Degree d) { return gamma_bfs(build_moment_graph(w.n), w, d); }

namespace {

bool is_two(BarValue v) { return v == plain(2) || v == barred(2); }

// (d1 >= 1, 1) regime; subcases follow the chain analysis of degree <= (1,1).
SchubertUnion gamma_11(const FlagLabel& w) {
  const int n = w.n;
  const auto [a, b, _] = w;
  if (a == barred(2) || b == barred(2)) return SchubertUnion::single(top_label(n));
  if ((a == plain(1) && b == plain(2)) || (a == plain(2) && b == plain(1)))
    return SchubertUnion::maximal_of({{barred(3), plain(2), n}, {barred(2), plain(1), n}});
  return SchubertUnion::single({barred(2), std::max(a, b), n});
}

}  // namespace

SchubertUnion gamma_closed_form(const FlagLabel& w, Degree d, ClosedFormVariant variant) {
  if (!w.is_valid()) throw std::domain_error("invalid label " + to_string(w));
  if (d.d1 < 0 || d.d2 < 0) throw std::domain_error("degree must be nonnegative");
  const int n = w.n;
  const auto [a, b, _] = w;
  if (d.d1 == 0 && d.d2 == 0) return SchubertUnion::single(w);
  if (d.d2 == 0) return SchubertUnion::single(a > b ? w : FlagLabel{b, a, n});
  if (d.d1 == 0) {
    const FlagLabel reach{a, is_two(a) ? barred(3) : barred(2), n};
    if (variant == ClosedFormVariant::DownSetCorrected && a == plain(2))
      return SchubertUnion::maximal_of({reach, {plain(1), barred(2), n}});
    return SchubertUnion::single(reach);
  }
  if (d.d2 == 1) return gamma_11(w);
  return SchubertUnion::single(top_label(n));
}

CrossCheckReport cross_check(int n, Degree dmax, ClosedFormVariant variant) {
  const MomentGraph g = build_moment_graph(n);
  CrossCheckReport report;
  report.n = n;
  report.dmax = dmax;
  for (const auto& w : g.vertices)
    for (int d1 = 0; d1 <= dmax.d1; ++d1)
      for (int d2 = 0; d2 <= dmax.d2; ++d2) {
        const Degree d{d1, d2};
        ++report.cells;
        auto searched = gamma_bfs(g, w, d);
        auto closed = gamma_closed_form(w, d, variant);
        if (!(searched == closed)) report.mismatches.push_back({w, d, std::move(searched), std::move(closed)});
      }
  return report;
}

}  // namespace ifodd
