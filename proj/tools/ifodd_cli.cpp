// ifodd: curve neighborhoods, lattices and the quantum Bruhat graph of the
// odd symplectic flag manifold IF(1,2; C^{2n+1}).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ifodd/curve_nbhd.hpp"
#include "ifodd/export.hpp"
#include "ifodd/lattice.hpp"
#include "ifodd/moment_graph.hpp"
#include "ifodd/qbg.hpp"
#include "ifodd/verify.hpp"

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = 2;
  int n_max = 2;
  std::string format = "table";
  std::string out;
  std::string w;
  std::string d = "0,0";
  std::string degree_filter;
  bool oracle = false;
  bool strict = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open " + opt.out);
  file << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (opt.format == f) return;
  throw std::invalid_argument("format '" + opt.format + "' not supported by this command");
}

int cmd_enumerate(const Options& opt) {
  require_format(opt, {"table", "json"});
  emit(opt, opt.format == "json" ? dump(ifodd::labels_json(opt.n)) : ifodd::labels_table(opt.n));
  return 0;
}

int cmd_moment_graph(const Options& opt) {
  require_format(opt, {"table", "json", "dot"});
  const auto g = ifodd::build_moment_graph(opt.n);
  if (opt.format == "dot") {
    std::optional<ifodd::Degree> filter;
    if (!opt.degree_filter.empty()) filter = ifodd::parse_degree(opt.degree_filter);
    emit(opt, ifodd::to_dot(g, filter));
  } else {
    emit(opt, opt.format == "json" ? dump(ifodd::to_json(g)) : ifodd::to_table(g));
  }
  return 0;
}

int cmd_nbhd(const Options& opt) {
  require_format(opt, {"table", "json"});
  if (opt.w.empty()) throw std::invalid_argument("--w is required");
  const auto w = ifodd::parse_label(opt.w, opt.n);
  const auto d = ifodd::parse_degree(opt.d);
  const auto gamma = ifodd::gamma_closed_form(w, d);
  if (opt.oracle) {
    const auto searched = ifodd::gamma_bfs(w, d);
    if (!(searched == gamma)) {
      std::cerr << "mismatch: closed form {" << ifodd::to_string(gamma) << "} vs search {"
                << ifodd::to_string(searched) << "}\n";
      return kExitVerification;
    }
  }
  emit(opt, opt.format == "json" ? dump(ifodd::nbhd_json(w, d, gamma)) : ifodd::to_string(gamma) + "\n");
  return 0;
}

int cmd_lattice(const Options& opt) {
  require_format(opt, {"table", "json", "dot"});
  std::vector<ifodd::FlagLabel> bases;
  if (opt.w.empty()) bases = ifodd::enumerate_labels(opt.n);
  else bases.push_back(ifodd::parse_label(opt.w, opt.n));
  if (opt.format == "dot" && bases.size() != 1) throw std::invalid_argument("dot output needs --w");

  std::string text;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& w : bases) {
    const auto L = ifodd::build_cn_lattice(w);
    if (!ifodd::is_lattice(L.order) || !ifodd::is_distributive(L.order))
      throw ifodd::VerificationError("curve neighborhoods of " + ifodd::to_string(w) + " fail the lattice checks");
    if (opt.format == "dot") text += ifodd::to_dot(L);
    else if (opt.format == "json") all.push_back(ifodd::to_json(L));
    else text += ifodd::to_table(L);
  }
  if (opt.format == "json") text = dump(bases.size() == 1 ? all.front() : all);
  emit(opt, text);
  return 0;
}

int cmd_qbg(const Options& opt) {
  require_format(opt, {"table", "json", "dot"});
  const auto rule = opt.strict ? ifodd::QuantumRule::StrictComponent : ifodd::QuantumRule::SubComponent;
  const auto g = ifodd::build_qbg(opt.n, rule);
  if (opt.format == "dot") {
    emit(opt, ifodd::to_dot(g));
  } else if (opt.format == "json") {
    emit(opt, dump(ifodd::to_json(g, ifodd::property_o_verdict(g))));
  } else {
    emit(opt, ifodd::to_table(g));
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  const auto rule = opt.strict ? ifodd::QuantumRule::StrictComponent : ifodd::QuantumRule::SubComponent;
  const auto summary = ifodd::run_verification(opt.n_max, rule);
  emit(opt, dump(summary.to_json()));
  for (const auto& c : summary.checks)
    if (!c.passed) std::cerr << "FAILED " << c.name << ": " << c.detail << "\n";
  return summary.ok() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curve neighborhoods and Property O for odd symplectic flag manifolds"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "rank parameter n >= 2");
    sub->add_option("--format", opt.format, "json, dot or table");
    sub->add_option("--out", opt.out, "write to FILE instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list odd symplectic labels with lengths");
  add_common(enumerate);
  auto* moment = app.add_subcommand("moment-graph", "degree-labelled moment graph");
  add_common(moment);
  moment->add_option("--degree", opt.degree_filter, "dot: keep only edges of this degree d1,d2");
  auto* nbhd = app.add_subcommand("nbhd", "curve neighborhood of a Schubert variety");
  add_common(nbhd);
  nbhd->add_option("--w", opt.w, "label a|b, -k for bar(k)");
  nbhd->add_option("--d", opt.d, "degree d1,d2");
  nbhd->add_flag("--oracle", opt.oracle, "also run the moment-graph search and compare");
  auto* lattice = app.add_subcommand("lattice", "lattice of curve neighborhoods");
  add_common(lattice);
  lattice->add_option("--w", opt.w, "base label (default: all)");
  auto* qbg = app.add_subcommand("qbg", "combinatorial quantum Bruhat graph");
  add_common(qbg);
  qbg->add_flag("--strict-qbg", opt.strict, "quantum targets must be components, not just lie below one");
  auto* verify = app.add_subcommand("verify", "run every check for n = 2..n_max");
  verify->add_option("--n-max", opt.n_max, "largest rank to check")->required();
  verify->add_option("--out", opt.out, "write summary to FILE");
  verify->add_flag("--strict-qbg", opt.strict, "use the strict component rule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      ifodd::require_rank(opt.n_max);
      return cmd_verify(opt);
    }
    ifodd::require_rank(opt.n);
    if (*enumerate) return cmd_enumerate(opt);
    if (*moment) return cmd_moment_graph(opt);
    if (*nbhd) return cmd_nbhd(opt);
    if (*lattice) return cmd_lattice(opt);
    if (*qbg) return cmd_qbg(opt);
  } catch (const ifodd::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
