#include <doctest.h>

#include "oracles.hpp"
#include "toplat/corpus.hpp"
#include "toplat/duality.hpp"
#include "toplat/error.hpp"

using namespace toplat;

namespace {

// Homomorphisms into Z(e), counted by trying every assignment on a greedy
// generating set and extending along products.
std::size_t count_homomorphisms(const FiniteGroup& g, std::size_t e) {
  std::vector<Element> gens;
  ElementSet span(g.order(), {g.identity()});
  for (Element x = 0; x < g.order(); ++x)
    if (!span.contains(x)) {
      gens.push_back(x);
      std::vector<Element> seed = gens;
      span = subgroup_generated(g, std::span<const Element>(seed)).members();
    }
  std::size_t count = 0;
  std::vector<std::size_t> v(gens.size(), 0);
  for (;;) {
    // Extend by breadth-first products, rejecting conflicts.
    std::vector<long> val(g.order(), -1);
    val[g.identity()] = 0;
    bool ok = true;
    for (bool grew = true; grew && ok;) {
      grew = false;
      for (Element x = 0; x < g.order() && ok; ++x) {
        if (val[x] < 0) continue;
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
          const Element y = g.mul(x, gens[i]);
          const long want = static_cast<long>((val[x] + v[i]) % e);
          if (val[y] < 0) {
            val[y] = want;
            grew = true;
          } else if (val[y] != want) {
            ok = false;
          }
        }
      }
    }
    if (ok) ++count;
    std::size_t i = gens.size();
    while (i > 0 && ++v[i - 1] == e) v[--i] = 0;
    if (i == 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("characters are homomorphisms and the dual has the right size") {
  for (const char* spec : {"Z 1", "Z 6", "Z2 x Z4", "Z^k 2 3", "Z3 x Z9", "Z2 x Z2 x Z4", "Z 16"}) {
    CAPTURE(spec);
    const auto g = parse_group(spec);
    const auto d = dual_group(g);
    CHECK(d.group.order() == g.order());
    CHECK(d.group.is_abelian());
    CHECK(count_homomorphisms(g, d.exponent) == g.order());
    for (const auto& chi : d.characters) {
      CHECK(chi(g.identity()) == 0);
      for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y) CHECK(chi(g.mul(x, y)) == (chi(x) + chi(y)) % d.exponent);
    }
    // Distinct characters.
    for (std::size_t i = 0; i < d.characters.size(); ++i)
      for (std::size_t j = i + 1; j < d.characters.size(); ++j) CHECK_FALSE(d.characters[i] == d.characters[j]);
    CHECK(oracle::isomorphic(d.group, g));
  }
}

TEST_CASE("dual of Z2 x Z4") {
  const auto d = dual_group(parse_group("Z2 x Z4"));
  CHECK(d.group.order() == 8);
  CHECK(exponent_and_element_orders(d.group).exponent == 4);
}

TEST_CASE("non-abelian groups are rejected") {
  CHECK_THROWS_AS(dual_group(make_symmetric(3)), InvalidArgument);
}

TEST_CASE("annihilators") {
  const auto g = make_elementary_abelian(2, 2);
  const auto d = dual_group(g);
  CHECK(annihilator(d, SubgroupSet::trivial(d.group)) == SubgroupSet::whole(g));
  CHECK(annihilator(d, SubgroupSet::whole(d.group)) == SubgroupSet::trivial(g));
  for (const auto& line : all_subgroups(d.group)) {
    if (line.size() != 2) continue;
    const auto k = annihilator(d, line);
    CHECK(k.size() == 2);
    CHECK(annihilator(d, dual_annihilator(d, k)) == k);
  }
  CHECK_THROWS_AS(annihilator(d, SubgroupSet::whole(g)), InvalidArgument);
}

TEST_CASE("Comfort-Ross map is a lattice isomorphism") {
  for (const char* spec : {"Z 5", "Z2 x Z4", "Z^k 2 3", "Z 12", "Z3 x Z3"}) {
    CAPTURE(spec);
    const auto r = comfort_ross_map(parse_group(spec));
    CHECK(r.passed());
    CHECK(r.dual_subgroups == r.topologies);
  }
  CHECK(comfort_ross_map(parse_group("Z^k 2 3")).dual_subgroups == 16);
  CHECK(comfort_ross_map(parse_group("Z2 x Z4")).dual_subgroups == 8);
}

TEST_CASE("characters export") {
  const auto j = characters_json(dual_group(make_cyclic(4)));
  CHECK(j["exponent"] == 4);
  CHECK(j["characters"].size() == 4);
  CHECK(j["characters"][1] == nlohmann::json::array({0, 1, 2, 3}));
}
