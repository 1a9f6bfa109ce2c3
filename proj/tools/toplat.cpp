#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toplat/corpus.hpp"
#include "toplat/duality.hpp"
#include "toplat/error.hpp"
#include "toplat/io.hpp"
#include "toplat/parallel.hpp"
#include "toplat/pontryagin.hpp"
#include "toplat/set_topology.hpp"
#include "toplat/suites.hpp"
#include "toplat/topology.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

void emit(const json& j, const std::string& path) {
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) throw toplat::InvalidArgument("cannot write " + path);
    out << j.dump(2) << '\n';
  }
  std::cout << j.dump(2) << '\n';
}

void write_dot_file(const toplat::FiniteLattice& l, const std::string& title, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw toplat::InvalidArgument("cannot write " + path);
  toplat::write_dot(out, l, title);
}

json verdict(const toplat::FiniteLattice& l, const toplat::Verdict& v) {
  json j{{"holds", v.holds}};
  if (!v.holds) {
    json w = json::array();
    for (auto i : v.witness) w.push_back(l.label(i));
    j["witness"] = w;
  }
  return j;
}

json lattice_report(const toplat::FiniteLattice& l) {
  const auto jh = toplat::jordan_holder_check(l, l.bottom(), l.top());
  return {{"size", l.size()},
          {"modular", verdict(l, toplat::check_modular(l))},
          {"distributive", verdict(l, toplat::check_distributive(l))},
          {"semimodular", verdict(l, toplat::check_semimodular(l))},
          {"dually_semimodular", verdict(l, toplat::check_dually_semimodular(l))},
          {"birkhoff", verdict(l, toplat::check_birkhoff(l))},
          {"dual_birkhoff", verdict(l, toplat::check_dual_birkhoff(l))},
          {"jordan_holder", {{"uniform", jh.uniform}, {"shortest", jh.shortest}, {"longest", jh.longest}}},
          {"height", toplat::height(l)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices of group topologies on finite groups"};
  app.require_subcommand(1);

  std::size_t workers = 0;
  bool seed_less = false;
  app.add_option("--workers", workers, "Worker threads (0 = available parallelism)");
  app.add_flag("--seed-less", seed_less, "Fully deterministic run (always the case; accepted for scripts)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Property report for one group");
  std::string group_spec, group_file, dot_path, json_path;
  std::optional<std::size_t> max_order;
  auto* group_opt = analyze->add_option("--group", group_spec, "Group in the mini-language, e.g. \"Z3 x Q8\"");
  analyze->add_option("--group-file", group_file, "Group as a JSON Cayley table")->excludes(group_opt);
  analyze->add_option("--dot", dot_path, "Write the Hasse diagram of L_G");
  analyze->add_option("--json", json_path, "Also write the report here");
  analyze->add_option("--max-order", max_order, "Subgroup enumeration cap");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, corpus_path;
  std::size_t points = 3;
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(toplat::suite_names()));
  verify->add_option("--max-order", max_order, "Largest group order swept");
  verify->add_option("--n", points, "Point count (toplattice-classical)");
  verify->add_option("--corpus", corpus_path, "Corpus file, one group spec per line");
  verify->add_option("--json", json_path, "Also write the summary here");

  // topologies
  auto* topologies = app.add_subcommand("topologies", "Enumerate topologies on n points");
  bool count_only = false;
  topologies->add_option("--n", points, "Point count (1..5)")->required();
  topologies->add_flag("--count", count_only, "Print only the count");

  // poset
  auto* poset = app.add_subcommand("poset", "Lattice properties of a poset given as JSON");
  std::string poset_file;
  poset->add_option("--file", poset_file, "Poset JSON")->required();
  poset->add_option("--dot", dot_path, "Write the Hasse diagram");
  poset->add_option("--json", json_path, "Also write the report here");

  // pontryagin
  auto* pontryagin = app.add_subcommand("pontryagin", "Check a neighbourhood family");
  std::string family_file;
  pontryagin->add_option("--file", family_file, "Family JSON")->required();
  pontryagin->add_option("--json", json_path, "Also write the report here");

  // dual
  auto* dual = app.add_subcommand("dual", "Characters and the duality map for an abelian group");
  dual->add_option("--group", group_spec, "Group in the mini-language")->required();
  dual->add_option("--json", json_path, "Also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    toplat::set_worker_count(workers);
    auto limits = toplat::Limits::from_environment();
    if (max_order && !verify->parsed())
      limits.enumeration = std::min(*max_order, toplat::Limits::kHardMaxOrder);

    if (analyze->parsed()) {
      if (group_spec.empty() && group_file.empty()) throw toplat::InvalidArgument("analyze needs --group or --group-file");
      const auto g = group_spec.empty() ? toplat::group_from_json(toplat::read_json_file(group_file), limits)
                                        : toplat::parse_group(group_spec, limits);
      const toplat::TopologyLattice tl(g, limits);
      const auto report = toplat::analyze(tl);
      if (!dot_path.empty()) write_dot_file(tl.lattice(), g.label(), dot_path);
      emit(report.to_json(tl), json_path);
      return report.invariants_hold ? kOk : kFailed;
    }

    if (verify->parsed()) {
      toplat::SuiteOptions options;
      options.max_order = max_order;
      options.n = points;
      options.limits = limits;
      if (!corpus_path.empty()) options.corpus = toplat::load_corpus_file(corpus_path, limits);
      const auto result = toplat::run_suite(suite, options);
      emit(result.to_json(), json_path);
      return result.passed ? kOk : kFailed;
    }

    if (topologies->parsed()) {
      const auto ts = toplat::enumerate_topologies(points);
      if (count_only)
        std::cout << ts.size() << '\n';
      else
        toplat::dump_topologies(std::cout, ts);
      return kOk;
    }

    if (poset->parsed()) {
      const auto l = toplat::lattice_from_json(toplat::read_json_file(poset_file));
      if (!dot_path.empty()) write_dot_file(l, poset_file, dot_path);
      emit(lattice_report(l), json_path);
      return kOk;
    }

    if (pontryagin->parsed()) {
      const auto family = toplat::family_from_json(toplat::read_json_file(family_file), limits);
      const auto report = toplat::check_conditions(family);
      auto j = report.to_json();
      if (report.is_basis()) j["kernel"] = toplat::generate_topology(family).kernel().members().members();
      emit(j, json_path);
      return report.is_basis() ? kOk : kFailed;
    }

    if (dual->parsed()) {
      const auto g = toplat::parse_group(group_spec, limits);
      const auto d = toplat::dual_group(g, limits);
      const auto report = toplat::comfort_ross_map(g, limits);
      emit({{"dual", toplat::characters_json(d)}, {"comfort_ross", report.to_json()}}, json_path);
      return report.passed() ? kOk : kFailed;
    }
  } catch (const toplat::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const toplat::NotAPoset& e) {
    std::cerr << "not a poset: " << e.what() << '\n';
    return kFailed;
  } catch (const toplat::NotALattice& e) {
    std::cerr << "not a lattice: " << e.what() << '\n';
    return kFailed;
  } catch (const toplat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
