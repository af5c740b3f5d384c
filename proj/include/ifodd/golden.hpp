#pragma once

// Reference data for n = 2 shipped with the library, and diffs against it.

#include <string>
#include <string_view>
#include <vector>

#include "ifodd/moment_graph.hpp"
#include "ifodd/qbg.hpp"

namespace ifodd::golden {

std::string_view moment_graph_text();
std::string_view neighborhoods_text();
std::string_view lattice_shapes_text();
std::string_view qbg_text();

struct Diff {
  std::vector<std::string> missing;     // in the golden file, not computed
  std::vector<std::string> unexpected;  // computed, not in the golden file

  bool ok() const { return missing.empty() && unexpected.empty(); }
  std::string summary() const;
};

/// Non-comment, non-empty lines with runs of blanks collapsed.
std::vector<std::string> records(std::string_view text);

Diff diff_moment_graph(const MomentGraph& g);
Diff diff_qbg(const QBGraph& g);

/// Each record "w d1,d2 : c1 c2 ..." is checked against both the search and
/// the closed form.
Diff diff_neighborhoods();
Diff diff_lattice_shapes();

}  // namespace ifodd::golden
