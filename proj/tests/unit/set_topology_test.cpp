#include <doctest.h>

#include <set>
#include <sstream>

#include "toplat/corpus.hpp"
#include "toplat/error.hpp"
#include "toplat/set_topology.hpp"

using namespace toplat;

namespace {

using Family = std::set<unsigned>;

// Every family of subsets of an n-set containing both ends and closed under
// pairwise union and intersection.
std::set<Family> family_oracle(unsigned n) {
  const unsigned subsets = 1U << n, full = subsets - 1;
  std::set<Family> out;
  for (unsigned long f = 0; f < (1UL << subsets); ++f) {
    Family fam;
    for (unsigned s = 0; s < subsets; ++s)
      if (f >> s & 1UL) fam.insert(s);
    if (!fam.count(0) || !fam.count(full)) continue;
    bool ok = true;
    for (auto a : fam)
      for (auto b : fam)
        if (!fam.count(a | b) || !fam.count(a & b)) ok = false;
    if (ok) out.insert(fam);
  }
  return out;
}

Family as_family(const SetTopology& t) { return Family(t.opens().begin(), t.opens().end()); }

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);
  CHECK(enumerate_topologies(5).size() == 6942);
  CHECK_THROWS_AS(enumerate_topologies(6), ResourceLimit);
  CHECK_THROWS_AS(enumerate_topologies(0), InvalidArgument);
}

TEST_CASE("enumeration matches the family oracle") {
  for (unsigned n = 1; n <= 3; ++n) {
    std::set<Family> got;
    for (const auto& t : enumerate_topologies(n)) got.insert(as_family(t));
    CHECK(got == family_oracle(n));
    CHECK(brute_force_topologies(n).size() == got.size());
  }
}

TEST_CASE("canonical order and closure") {
  const auto ts = enumerate_topologies(4);
  CHECK(std::is_sorted(ts.begin(), ts.end()));
  CHECK(ts.front() == SetTopology::anti_discrete(4));
  CHECK(ts.back() == SetTopology::discrete(4));
  for (const auto& t : ts) CHECK_NOTHROW(SetTopology(4, t.opens()));
}

TEST_CASE("invalid families are rejected") {
  CHECK_THROWS_AS(SetTopology(2, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(SetTopology(2, {1, 3}), InvalidArgument);
  CHECK_THROWS_AS(SetTopology(3, {0, 1, 2, 7}), InvalidArgument);
  CHECK_THROWS_AS(SetTopology(2, {0, 3, 8}), InvalidArgument);
  CHECK_THROWS_AS(SetTopology(6, {0, 63}), ResourceLimit);
}

TEST_CASE("meets and joins") {
  const auto ts = enumerate_topologies(3);
  const auto discrete = SetTopology::discrete(3), indiscrete = SetTopology::anti_discrete(3);
  for (const auto& t : ts) {
    CHECK(top_meet(t, discrete) == t);
    CHECK(top_join(t, indiscrete) == t);
  }
  // Least upper bound against the whole enumeration.
  for (const auto& a : ts)
    for (const auto& b : ts) {
      const auto j = top_join(a, b);
      CHECK(a.coarser_or_equal(j));
      CHECK(b.coarser_or_equal(j));
      for (const auto& t : ts)
        if (a.coarser_or_equal(t) && b.coarser_or_equal(t)) CHECK(j.coarser_or_equal(t));
    }
  CHECK_THROWS_AS(top_join(discrete, SetTopology::discrete(2)), InvalidArgument);
  CHECK_THROWS_AS(top_meet(discrete, SetTopology::discrete(2)), InvalidArgument);
}

TEST_CASE("toplattice of two points is a distributive four-element lattice") {
  const auto l = toplattice(2);
  CHECK(l.size() == 4);
  CHECK(is_distributive(l));
  CHECK_THROWS_AS(toplattice(5), ResourceLimit);
}

TEST_CASE("classical facts") {
  const auto r3 = verify_classical_facts(3);
  CHECK(r3.count == 29);
  CHECK(r3.oracle_count == std::optional<std::size_t>(29));
  CHECK_FALSE(r3.distributive.holds);
  CHECK(r3.distributive.witness.size() == 3);
  CHECK(r3.join_is_least_upper_bound == std::optional<bool>(true));
  CHECK(r3.closure_invariants);
  CHECK(r3.preorder_roundtrip);
  // The dual Birkhoff property in its stated form fails on three points.
  CHECK_FALSE(r3.dual_birkhoff.holds);
  REQUIRE(r3.dual_birkhoff.witness.size() == 2);
  const auto& a = r3.topologies[r3.dual_birkhoff.witness[0]];
  const auto& b = r3.topologies[r3.dual_birkhoff.witness[1]];
  const auto m = top_meet(a, b);
  bool between = false;
  for (const auto& t : r3.topologies)
    if ((m.coarser_or_equal(t) && t.coarser_or_equal(a) && !(t == m) && !(t == a)) ||
        (m.coarser_or_equal(t) && t.coarser_or_equal(b) && !(t == m) && !(t == b)))
      between = true;
  CHECK(between);

  const auto r4 = verify_classical_facts(4);
  CHECK(r4.count == 355);
  CHECK_FALSE(r4.distributive.holds);
  CHECK_FALSE(r4.join_is_least_upper_bound.has_value());

  CHECK(verify_classical_facts(2).distributive.holds);
}

TEST_CASE("group topologies inside the toplattice") {
  for (const char* spec : {"Z 2", "Z 3", "Z 4", "Z2 x Z2"}) {
    CAPTURE(spec);
    const auto r = embed_group_topologies(parse_group(spec));
    CHECK(r.joins_agree);
    // Coset-union topologies are closed under meets on a finite group.
    CHECK_FALSE(r.meet_disagreement.has_value());
  }
  CHECK_THROWS_AS(embed_group_topologies(make_cyclic(5)), ResourceLimit);
  const auto t = coset_topology(GroupTopology(SubgroupSet(make_cyclic(4), ElementSet(4, {0, 2}))));
  CHECK(t.opens() == std::vector<std::uint32_t>{0, 5, 10, 15});
}

TEST_CASE("dump format") {
  std::ostringstream out;
  dump_topologies(out, enumerate_topologies(2));
  CHECK(out.str() == "0 3\n0 1 3\n0 2 3\n0 1 2 3\n");
}
