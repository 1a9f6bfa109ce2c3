#include "toplat/suites.hpp"

#include <functional>
#include <map>

#include "toplat/duality.hpp"
#include "toplat/error.hpp"
#include "toplat/pontryagin.hpp"
#include "toplat/set_topology.hpp"
#include "toplat/topology.hpp"

namespace toplat {

namespace {

using Runner = std::function<void(const SuiteOptions&, SuiteResult&)>;

std::vector<CorpusEntry> groups_up_to(const SuiteOptions& o, std::size_t default_max, bool abelian_only = false) {
  const std::size_t max = o.max_order.value_or(default_max);
  const auto& src = o.corpus ? *o.corpus : builtin_corpus();
  std::vector<CorpusEntry> out;
  for (const auto& e : src)
    if (e.group.order() <= max && (!abelian_only || e.group.is_abelian())) out.push_back(e);
  return out;
}

std::vector<CorpusEntry> named_groups(const SuiteOptions& o, std::initializer_list<const char*> specs) {
  if (o.corpus) return *o.corpus;
  std::vector<CorpusEntry> out;
  for (const char* s : specs) out.push_back({s, s, parse_group(s, o.limits)});
  return out;
}

void add(SuiteResult& r, const VerificationReport& v, const std::string& name) {
  r.checked += v.checked;
  r.violations += v.violations;
  auto j = v.to_json();
  j["entry"] = name;
  r.details.push_back(std::move(j));
}

template <class Verify>
void sweep(const std::vector<CorpusEntry>& groups, const SuiteOptions& o, SuiteResult& r,
           std::initializer_list<Verify> checks) {
  for (const auto& e : groups) {
    ++r.groups;
    for (const auto& check : checks) add(r, check(e.group, o.limits), e.name);
  }
}

using Check = VerificationReport (*)(const FiniteGroup&, const Limits&);

void pontryagin_roundtrip(const SuiteOptions& o, SuiteResult& r) {
  for (const auto& e : groups_up_to(o, 24)) {
    ++r.groups;
    const auto& g = e.group;
    std::size_t checked = 0, violations = 0;
    nlohmann::json witness;
    for (const auto& n : all_subgroups(g, o.limits)) {
      ++checked;
      const NeighborhoodFamily family(g, {n.members()});
      const auto report = check_conditions(family);
      bool ok;
      if (is_normal(n)) {
        ok = report.is_basis() && generate_topology(family).kernel() == n;
      } else {
        ok = !report.conditions[3].holds && report.conditions[3].element.has_value();
        for (std::size_t c : {0, 1, 2, 4}) ok = ok && report.conditions[c].holds;
      }
      if (!ok && violations++ == 0) witness = {{"N", n.members().members()}, {"report", report.to_json()}};
    }
    r.checked += checked;
    r.violations += violations;
    nlohmann::json j{{"entry", e.name}, {"group", g.label()}, {"checked", checked}, {"violations", violations}};
    if (violations) j["witness"] = witness;
    r.details.push_back(std::move(j));
  }
}

void comfort_ross(const SuiteOptions& o, SuiteResult& r) {
  for (const auto& e : groups_up_to(o, 32, true)) {
    ++r.groups;
    ++r.checked;
    const auto report = comfort_ross_map(e.group, o.limits);
    if (!report.passed()) ++r.violations;
    auto j = report.to_json();
    j["entry"] = e.name;
    r.details.push_back(std::move(j));
  }
}

void toplattice_classical(const SuiteOptions& o, SuiteResult& r) {
  const auto report = verify_classical_facts(o.n);
  ++r.checked;
  if (!report.passed()) ++r.violations;
  r.details.push_back(report.to_json());
  for (const char* s : {"Z 2", "Z 3", "Z 4", "Z^k 2 2"}) {
    const auto g = parse_group(s, o.limits);
    const auto emb = embed_group_topologies(g, o.limits);
    ++r.groups;
    ++r.checked;
    if (!emb.joins_agree) ++r.violations;
    r.details.push_back(emb.to_json(TopologyLattice(g, o.limits)));
  }
}

void prodanov(const SuiteOptions& o, SuiteResult& r) {
  for (const auto& e : named_groups(o, {"Z^k 2 2", "Z^k 3 2", "Z 4", "Z 9", "Z 6"})) {
    ++r.groups;
    const TopologyLattice tl(e.group, o.limits);
    const auto p = prodanov_lattice(tl, o.limits);
    // Closure must be extensive, idempotent and monotone.
    bool closure_ok = true;
    for (std::uint32_t b = 0; b < p.closures.size(); ++b) {
      closure_ok = closure_ok && (b & ~p.closure(b)) == 0 && p.closure(p.closure(b)) == p.closure(b);
      for (std::uint32_t c = 0; c < p.closures.size(); ++c)
        if ((b & ~c) == 0) closure_ok = closure_ok && (p.closure(b) & ~p.closure(c)) == 0;
    }
    ++r.checked;
    const bool ok = closure_ok && p.join_is_least_upper_bound;
    if (!ok) ++r.violations;
    auto j = p.to_json(tl);
    j["entry"] = e.name;
    j["closure_operator"] = closure_ok;
    r.details.push_back(std::move(j));
  }
}

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> m = {
      {"merzon",
       [](const SuiteOptions& o, SuiteResult& r) { sweep<Check>(groups_up_to(o, 16), o, r, {&verify_merzon}); }},
      {"oct11",
       [](const SuiteOptions& o, SuiteResult& r) {
         sweep<Check>(groups_up_to(o, 16), o, r,
                      {&verify_restriction_join, &verify_quotient_meet, &verify_saturation_join});
       }},
      {"cover-transfer",
       [](const SuiteOptions& o, SuiteResult& r) {
         sweep<Check>(groups_up_to(o, 16), o, r, {&verify_cover_transfer});
       }},
      {"meet-basis",
       [](const SuiteOptions& o, SuiteResult& r) { sweep<Check>(groups_up_to(o, 16), o, r, {&verify_meet_basis}); }},
      {"semimod-transfer",
       [](const SuiteOptions& o, SuiteResult& r) {
         sweep<Check>(groups_up_to(o, 24), o, r, {&verify_semimodular_transfer});
       }},
      {"th0-product",
       [](const SuiteOptions& o, SuiteResult& r) {
         auto groups = named_groups(o, {"Z3 x Q8", "Z3^2 x D4", "Z5 x Q8", "Z3 x Heis 2"});
         std::erase_if(groups, [](const CorpusEntry& e) { return !e.group.is_marked_product(); });
         sweep<Check>(groups, o, r, {&verify_product_decomposition});
       }},
      {"comfort-ross", comfort_ross},
      {"pontryagin-roundtrip", pontryagin_roundtrip},
      {"toplattice-classical", toplattice_classical},
      {"prodanov", prodanov},
  };
  return m;
}

}  // namespace

nlohmann::json SuiteResult::to_json() const {
  return {{"suite", suite},   {"passed", passed},         {"groups", groups},
          {"checked", checked}, {"violations", violations}, {"details", details}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "merzon",       "oct11",                "cover-transfer",       "meet-basis", "semimod-transfer",
      "th0-product",  "comfort-ross",         "pontryagin-roundtrip", "toplattice-classical", "prodanov"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  const auto it = runners().find(name);
  if (it == runners().end()) throw InvalidArgument("unknown suite '" + name + "'");
  SuiteResult r;
  r.suite = name;
  it->second(options, r);
  r.passed = r.violations == 0;
  return r;
}

}  // namespace toplat
