#pragma once

// JSON, DOT and plain-table renderings used by the command line tool.

#include <json.hpp>
#include <string>

#include "ifodd/curve_nbhd.hpp"
#include "ifodd/lattice.hpp"
#include "ifodd/moment_graph.hpp"
#include "ifodd/qbg.hpp"

namespace ifodd {

inline constexpr int kJsonSchemaVersion = 1;

nlohmann::json labels_json(int n);
std::string labels_table(int n);

nlohmann::json to_json(const MomentGraph& g);
std::string to_table(const MomentGraph& g);

nlohmann::json nbhd_json(const FlagLabel& w, Degree d, const SchubertUnion& gamma);

nlohmann::json to_json(const CNLattice& L);
std::string to_dot(const CNLattice& L);
std::string to_table(const CNLattice& L);

nlohmann::json to_json(const PropertyOVerdict& v);
nlohmann::json to_json(const QBGraph& g, const PropertyOVerdict& v);
std::string to_table(const QBGraph& g);

}  // namespace ifodd
