#include "ifodd/verify.hpp"

#include <algorithm>
#include <functional>

#include "ifodd/curve_nbhd.hpp"
#include "ifodd/golden.hpp"
#include "ifodd/lattice.hpp"

namespace ifodd {

bool VerificationSummary::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json VerificationSummary::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json row = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) row["detail"] = c.detail;
    rows.push_back(row);
  }
  nlohmann::json dims = nlohmann::json::array();
  for (auto [n, len] : top_lengths)
    dims.push_back({{"n", n}, {"length_top", len}, {"stated_4n_minus_6", 4 * n - 6}, {"flagged", len != 4 * n - 6}});
  return {{"version", 1},
          {"n_max", n_max},
          {"rule", rule == QuantumRule::SubComponent ? "sub-component" : "strict-component"},
          {"ok", ok()},
          {"checks", rows},
          {"dimension_discrepancy", dims}};
}

namespace {

// Runs body; VerificationError and domain errors become a failed check.
CheckResult run_check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

std::string diff_detail(const golden::Diff& d) { return d.ok() ? std::string() : d.summary(); }

}  // namespace

VerificationSummary run_verification(int n_max, QuantumRule rule) {
  require_rank(n_max);
  VerificationSummary s;
  s.n_max = n_max;
  s.rule = rule;

  s.checks.push_back(run_check("golden/n2/moment-graph",
                               [] { return diff_detail(golden::diff_moment_graph(build_moment_graph(2))); }));
  s.checks.push_back(run_check("golden/n2/neighborhoods", [] { return diff_detail(golden::diff_neighborhoods()); }));
  s.checks.push_back(run_check("golden/n2/lattice-shapes", [] { return diff_detail(golden::diff_lattice_shapes()); }));
  s.checks.push_back(
      run_check("golden/n2/qbg", [rule] { return diff_detail(golden::diff_qbg(build_qbg(2, rule))); }));

  for (int n = 2; n <= n_max; ++n) {
    const std::string tag = "n" + std::to_string(n);
    s.top_lengths.push_back({n, length(top_label(n))});

    s.checks.push_back(run_check(tag + "/curve-neighborhoods", [n] {
      const CrossCheckReport report = cross_check(n, Degree{2, 2});
      if (report.ok()) return std::string();
      const auto& m = report.mismatches.front();
      return std::to_string(report.mismatches.size()) + " mismatches, first at w=" + to_string(m.w) +
             " d=" + to_string(m.d) + ": search {" + to_string(m.by_search) + "} vs closed form {" +
             to_string(m.closed_form) + "}";
    }));

    s.checks.push_back(run_check(tag + "/lattices", [n] {
      for (const auto& w : enumerate_labels(n)) {
        const CNLattice L = build_cn_lattice(w);
        if (!is_lattice(L.order)) return "not a lattice at " + to_string(w);
        if (!is_distributive(L.order)) return "not distributive at " + to_string(w);
        classify_shape(L);
      }
      return std::string();
    }));

    s.checks.push_back(run_check(tag + "/property-o", [n, rule] {
      const PropertyOVerdict v = property_o_verdict(n, rule);
      if (v.holds) return std::string();
      return "strongly_connected=" + std::string(v.strongly_connected ? "true" : "false") +
             " gcd=" + std::to_string(v.gcd) + " fano_index=" + std::to_string(v.fano_index);
    }));
  }
  return s;
}

}  // namespace ifodd
