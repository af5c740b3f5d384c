// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "ifodd/curve_nbhd.hpp"
#include "ifodd/golden.hpp"
#include "ifodd/lattice.hpp"
#include "ifodd/moment_graph.hpp"
#include "ifodd/qbg.hpp"
#include "oracles.hpp"

using namespace ifodd;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream why;

  void require(bool ok, const std::string& msg) {
    if (!ok) {
      if (pass) why << msg;
      else why << "; " << msg;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0)
    o.require(secs < limit_s, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_s) + " s");
  std::printf("%s  %d  %s  (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", number, title, secs, o.pass ? "" : "  -- ",
              o.why.str().c_str());
  if (!o.pass) ++failures;
}

}  // namespace

int main() {
  criterion(1, "enumeration n=2: 16 vertices, levels 1,2,3,4,3,2,1", 1.0, [](Outcome& o) {
    const auto labels = enumerate_labels(2);
    o.require(labels.size() == 16, "vertex count " + std::to_string(labels.size()));
    std::map<int, int> levels;
    for (const auto& w : labels) ++levels[length(w)];
    o.require(levels == std::map<int, int>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 3}, {5, 2}, {6, 1}}, "level distribution");
  });

  criterion(2, "moment graph n=2: degree counts (8,18,18,4) and golden file", 0, [](Outcome& o) {
    const auto g = build_moment_graph(2);
    std::map<std::pair<int, int>, int> counts;
    for (const auto& e : g.edges) ++counts[{e.deg.d1, e.deg.d2}];
    o.require(counts[{1, 0}] == 8 && counts[{0, 1}] == 18 && counts[{1, 1}] == 18 && counts[{1, 2}] == 4 &&
                  g.edges.size() == 48,
              "degree counts");
    const auto diff = golden::diff_moment_graph(g);
    o.require(diff.ok(), "golden diff: " + diff.summary());
  });

  criterion(3, "curve neighborhoods: search == closed form, n=2..4, d<=(2,2)", 10.0, [](Outcome& o) {
    const std::size_t expected_cells[] = {16 * 9, 36 * 9, 64 * 9};
    for (int n = 2; n <= 4; ++n) {
      const auto r = cross_check(n, {2, 2});
      o.require(r.cells == expected_cells[n - 2], "cell count at n=" + std::to_string(n));
      if (!r.ok()) {
        const auto& m = r.mismatches.front();
        o.require(false, "n=" + std::to_string(n) + ": " + std::to_string(r.mismatches.size()) +
                             " mismatches, first w=" + to_string(m.w) + " d=" + to_string(m.d) + " search {" +
                             to_string(m.by_search) + "} closed form {" + to_string(m.closed_form) + "}");
      }
    }
    const auto spots = golden::diff_neighborhoods();
    o.require(spots.ok(), "figure spot values: " + spots.summary());
  });

  criterion(4, "lattices n=2..5: lattice, distributive, shape table", 5.0, [](Outcome& o) {
    for (int n = 2; n <= 5; ++n)
      for (const auto& w : enumerate_labels(n)) {
        const std::string at = " at n=" + std::to_string(n) + " w=" + to_string(w);
        o.require(matching_shapes(w).size() == 1, "predicates do not partition" + at);
        const auto L = build_cn_lattice(w);
        if (!is_lattice(L.order)) {
          o.require(false, "not a lattice" + at);
          continue;
        }
        o.require(satisfies_distributive_law(L.order) == !has_m3_or_n5_sublattice(L.order), "checks disagree" + at);
        o.require(satisfies_distributive_law(L.order), "not distributive" + at);
        try {
          classify_shape(L);
        } catch (const VerificationError& e) {
          o.require(false, e.what() + std::string(" (n=") + std::to_string(n) + ")");
        }
      }
  });

  criterion(5, "QBG n=2 matches golden; strict rule fails it", 0, [](Outcome& o) {
    const auto sub = golden::diff_qbg(build_qbg(2));
    o.require(sub.ok(), "sub-component rule: " + sub.summary());
    const auto strict = golden::diff_qbg(build_qbg(2, QuantumRule::StrictComponent));
    o.require(!strict.ok(), "strict rule unexpectedly matches the golden file");
  });

  criterion(6, "Property O n=2..6: strongly connected, gcd 1 = Fano index, witness cycles", 30.0, [](Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
      const auto v = property_o_verdict(n);
      const std::string at = " at n=" + std::to_string(n);
      o.require(v.strongly_connected, "not strongly connected" + at);
      o.require(v.gcd == 1 && v.fano_index == 1, "gcd " + std::to_string(v.gcd) + at);
      o.require(v.witness_cycles.size() == 2 && v.witness_cycles[0].size() == 2 &&
                    v.witness_cycles[1].size() == static_cast<std::size_t>(2 * n - 1),
                "witness cycle lengths" + at);
    }
  });

  criterion(7, "Bruhat order == reflection-closure oracle, n=2,3", 0, [](Outcome& o) {
    for (int n = 2; n <= 3; ++n) {
      const auto Q = oracle::build_quotient(n);
      std::size_t bad = 0;
      for (std::size_t i = 0; i < Q.G.elements.size(); ++i)
        for (std::size_t j = 0; j < Q.G.elements.size(); ++j)
          if (bruhat_leq(oracle::from_perm(Q.G.elements[i]), oracle::from_perm(Q.G.elements[j])) != Q.leq[i][j]) ++bad;
      for (const auto& u : enumerate_labels(n))
        for (const auto& v : enumerate_labels(n))
          if (bruhat_leq(u, v) != Q.less_equal(u, v)) ++bad;
      o.require(bad == 0, std::to_string(bad) + " disagreements at n=" + std::to_string(n));
    }
  });

  criterion(8, "moment discrepancy (1|2)->(-2|1) of degree (1,1) at n=2", 0, [](Outcome& o) {
    const FlagLabel u{plain(1), plain(2), 2}, v{barred(2), plain(1), 2};
    bool found = false;
    for (const auto& d : moment_discrepancies(2))
      if (d.u == u && d.v == v && d.d == Degree{1, 1}) found = true;
    o.require(found, "not reported");
  });

  criterion(9, "length of top element = 4n-2, n=2..6", 0, [](Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
      const int len = length(top_label(n));
      o.require(len == 4 * n - 2, "length " + std::to_string(len) + " at n=" + std::to_string(n));
      std::printf("      n=%d  l(-2|-3)=%d  stated 4n-6=%d  discrepancy flagged\n", n, len, 4 * n - 6);
    }
    o.require(length(top_label(2)) == 6, "n=2 top length");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
