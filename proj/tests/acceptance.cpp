// Acceptance checks. One line per criterion; pass an id (AC1..AC11) to run
// just that one. Exit status is non-zero when any selected check fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "support/small_lattices.hpp"
#include "toplat/corpus.hpp"
#include "toplat/lattice.hpp"
#include "toplat/set_topology.hpp"
#include "toplat/suites.hpp"
#include "toplat/topology.hpp"

using namespace toplat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

Outcome from_suites(std::initializer_list<const char*> names) {
  Outcome o;
  std::size_t groups = 0, checked = 0, violations = 0;
  for (const char* name : names) {
    const auto r = run_suite(name);
    groups += r.groups;
    checked += r.checked;
    violations += r.violations;
    if (!r.passed) {
      o.ok = false;
      o.detail += std::string(" ") + name + " failed;";
    }
  }
  o.detail = std::to_string(checked) + " checks, " + std::to_string(violations) + " violations" + o.detail;
  (void)groups;
  return o;
}

Outcome ac1() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& e : builtin_corpus()) {
    if (!e.group.is_abelian() || e.group.order() > 64) continue;
    ++n;
    if (!is_modular(TopologyLattice(e.group).lattice())) {
      o.ok = false;
      o.detail += " non-modular: " + e.name;
    }
  }
  o.detail = std::to_string(n) + " abelian groups" + o.detail;
  return o;
}

Outcome ac2() {
  Outcome o;
  for (const char* s : {"Q8", "D 4", "Heis 2", "Heis 3", "Z3 x Q8", "Z3 x D4", "Z2 x Q8", "Z3^2 x D4"}) {
    const TopologyLattice tl(parse_group(s));
    const auto& l = tl.lattice();
    const bool semi = is_semimodular(l);
    const bool jh = jordan_holder_check(l, l.bottom(), l.top()).uniform;
    if (!semi || !jh) {
      o.ok = false;
      o.detail += std::string(" ") + s + (semi ? "" : " not semimodular") + (jh ? "" : " chains differ");
    }
  }
  if (o.ok) o.detail = "8 groups semimodular with uniform chains";
  return o;
}

Outcome ac3() {
  Outcome o;
  std::size_t topologies = 0, split = 0;
  for (const char* s : {"Z3 x Q8", "Z3^2 x D4", "Z5 x Q8", "Z3 x Heis 2"}) {
    const auto g = parse_group(s);
    const TopologyLattice tl(g);
    for (const auto& tau : tl.topologies()) {
      ++topologies;
      if (decompose_product_topology(tau).is_product) ++split;
    }
    if (!verify_product_decomposition(g).passed()) {
      o.ok = false;
      o.detail += std::string(" ") + s;
    }
  }
  if (split != topologies) o.ok = false;
  o.detail = std::to_string(split) + "/" + std::to_string(topologies) + " topologies split" + o.detail;
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto r3 = verify_classical_facts(3);
  const auto r4 = verify_classical_facts(4);
  const bool count = r3.count == 29 && r3.oracle_count == std::optional<std::size_t>(29);
  const bool nondist = !r3.distributive.holds && !r4.distributive.holds;
  o.ok = count && nondist && r3.dual_birkhoff.holds;
  o.detail = "count " + std::to_string(r3.count) + (count ? " ok" : " wrong") + ", non-distributive n=3,4 " +
             (nondist ? "ok" : "missing") + ", dual Birkhoff n=3 ";
  if (r3.dual_birkhoff.holds) {
    o.detail += "holds";
  } else {
    const auto& a = r3.topologies[r3.dual_birkhoff.witness[0]];
    const auto& b = r3.topologies[r3.dual_birkhoff.witness[1]];
    o.detail += "fails (" + std::to_string(r3.dual_birkhoff_pairs) + " pairs covered by their join checked), e.g. {" +
                a.to_string() + "} and {" + b.to_string() + "}";
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  for (const char* s : {"Z^k 2 2", "Z^k 3 2"}) {
    const TopologyLattice tl(parse_group(s));
    const auto p = prodanov_lattice(tl);
    // Some pair of coatoms closes to something strictly larger.
    bool strict = false;
    for (std::uint32_t b = 0; b < p.closures.size(); ++b)
      if (std::popcount(b) == 2 && p.closure(b) != b && (b & ~p.closure(b)) == 0) strict = true;
    if (!strict) {
      o.ok = false;
      o.detail += std::string(" ") + s + " freely generated;";
    }
  }
  for (const char* s : {"Z 4", "Z 9", "Z 25", "Z 6"}) {
    const TopologyLattice tl(parse_group(s));
    if (!prodanov_lattice(tl).freely_generated()) {
      o.ok = false;
      o.detail += std::string(" ") + s + " has a non-closed set;";
    }
  }
  if (o.ok) o.detail = "Z2^2, Z3^2 not freely generated; Z4, Z9, Z25, Z6 all closed";
  return o;
}

Outcome ac11() {
  Outcome o;
  std::size_t total = 0, mod = 0, dist = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& l : small_lattices::all_lattices(n)) {
      ++total;
      const bool m = is_modular(l), s = is_semimodular(l), d = is_distributive(l);
      const bool jh = jordan_holder_everywhere(l);
      mod += m;
      dist += d;
      if ((m && !s) || (s && !jh) || (d && !m)) o.ok = false;
    }
  const auto n5 = pentagon_n5(), m3 = diamond_m3();
  const bool classified = !is_modular(n5) && !is_semimodular(n5) && is_modular(m3) && !is_distributive(m3);
  o.ok = o.ok && classified && total == 1 + 1 + 1 + 2 + 5 + 15 + 53;
  o.detail = std::to_string(total) + " lattices, " + std::to_string(mod) + " modular, " + std::to_string(dist) +
             " distributive; N5/M3 " + (classified ? "ok" : "misclassified");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"AC1", "abelian groups up to 64 give modular lattices", 60, ac1},
      {"AC2", "nilpotent groups: semimodular, equal chain lengths", 120, ac2},
      {"AC3", "coprime products split into product topologies", 120, ac3},
      {"AC4", "Merzon counterexamples, order <= 16", 60, [] { return from_suites({"merzon"}); }},
      {"AC5", "restriction/quotient/saturation/meet-basis/cover identities, order <= 16", 120,
       [] { return from_suites({"oct11", "meet-basis", "cover-transfer"}); }},
      {"AC6", "semimodularity transfer through central quotients, order <= 24", 60,
       [] { return from_suites({"semimod-transfer"}); }},
      {"AC7", "duality with subgroups of the character group, abelian order <= 32", 60,
       [] { return from_suites({"comfort-ross"}); }},
      {"AC8", "topologies on finite sets", 60, ac8},
      {"AC9", "neighbourhood-basis round trip, order <= 24", 30,
       [] { return from_suites({"pontryagin-roundtrip"}); }},
      {"AC10", "Prodanov closure", 10, ac10},
      {"AC11", "lattice checker consistency, up to 7 elements", 60, ac11},
  };

  std::vector<std::string> wanted(argv + 1, argv + argc);
  bool any_failed = false, any_run = false;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    any_run = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.ok && in_time;
    any_failed = any_failed || !pass;
    std::printf("[%s] %s %s: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                o.detail.c_str(), secs, c.limit_s, in_time ? "" : ", too slow");
  }
  if (!any_run) {
    std::fprintf(stderr, "unknown criterion\n");
    return 2;
  }
  return any_failed ? 1 : 0;
}
