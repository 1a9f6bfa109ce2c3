#include <doctest.h>

#include <set>

#include "toplat/error.hpp"
#include "toplat/lattice.hpp"

using namespace toplat;

namespace {

// Least upper bound by scanning every element.
std::size_t scan_join(const FiniteLattice& l, std::size_t a, std::size_t b) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (!l.leq(a, x) || !l.leq(b, x)) continue;
    bool least = true;
    for (std::size_t y = 0; y < l.size(); ++y)
      if (l.leq(a, y) && l.leq(b, y) && !l.leq(x, y)) least = false;
    if (least) return x;
  }
  return l.size();
}

std::size_t scan_meet(const FiniteLattice& l, std::size_t a, std::size_t b) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (!l.leq(x, a) || !l.leq(x, b)) continue;
    bool greatest = true;
    for (std::size_t y = 0; y < l.size(); ++y)
      if (l.leq(y, a) && l.leq(y, b) && !l.leq(y, x)) greatest = false;
    if (greatest) return x;
  }
  return l.size();
}

bool scan_covers(const FiniteLattice& l, std::size_t b, std::size_t a) {
  if (!l.less(b, a)) return false;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.less(b, x) && l.less(x, a)) return false;
  return true;
}

// Divisors of n ordered by divisibility.
FiniteLattice divisor_lattice(std::size_t n) {
  std::vector<std::size_t> d;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return FiniteLattice::build(d.size(), [&](std::size_t i, std::size_t j) { return d[j] % d[i] == 0; });
}

}  // namespace

TEST_CASE("tables agree with scanning oracles") {
  for (const auto& l : {pentagon_n5(), diamond_m3(), centered_hexagon_s7(), boolean_lattice(3), divisor_lattice(60),
                        product_lattice(chain_lattice(3), diamond_m3())}) {
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        CHECK(l.join(a, b) == scan_join(l, a, b));
        CHECK(l.meet(a, b) == scan_meet(l, a, b));
        CHECK(l.covers(a, b) == scan_covers(l, a, b));
      }
    CHECK(l.down_set(l.top()).size() == l.size());
    CHECK(l.up_set(l.bottom()).size() == l.size());
  }
}

TEST_CASE("build rejects relations that are not partial orders") {
  // Not antisymmetric.
  CHECK_THROWS_AS(FiniteLattice::build(2, [](std::size_t, std::size_t) { return true; }), NotAPoset);
  // Not reflexive.
  CHECK_THROWS_AS(FiniteLattice::build(2, [](std::size_t a, std::size_t b) { return a < b; }), NotAPoset);
  // Not transitive: 0 <= 1 <= 2 but not 0 <= 2.
  CHECK_THROWS_AS(FiniteLattice::build(3,
                                       [](std::size_t a, std::size_t b) {
                                         return a == b || (a == 0 && b == 1) || (a == 1 && b == 2);
                                       }),
                  NotAPoset);
}

TEST_CASE("build rejects posets without joins") {
  // 0 < a, b < c, d < 1: a and b have two minimal upper bounds.
  const std::set<std::pair<std::size_t, std::size_t>> lt = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                                            {2, 3}, {2, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
  try {
    FiniteLattice::build(6, [&](std::size_t a, std::size_t b) { return a == b || lt.count({a, b}); });
    FAIL("expected NotALattice");
  } catch (const NotALattice& e) {
    const std::set<std::size_t> pair = {e.first(), e.second()};
    CHECK((pair == std::set<std::size_t>{1, 2} || pair == std::set<std::size_t>{3, 4}));
  }
  // Two maximal elements.
  CHECK_THROWS_AS(FiniteLattice::build(3, [](std::size_t a, std::size_t b) { return a == b || a == 0; }),
                  NotALattice);
}

TEST_CASE("pentagon N5") {
  const auto n5 = pentagon_n5();
  const auto mod = check_modular(n5);
  CHECK_FALSE(mod.holds);
  REQUIRE(mod.witness.size() == 3);
  const auto a = mod.witness[0], b = mod.witness[1], c = mod.witness[2];
  CHECK(n5.leq(a, c));
  CHECK(n5.join(a, n5.meet(b, c)) != n5.meet(n5.join(a, b), c));
  CHECK_FALSE(is_semimodular(n5));
  CHECK_FALSE(is_dually_semimodular(n5));
  CHECK_FALSE(is_distributive(n5));

  const auto jh = jordan_holder_check(n5, n5.bottom(), n5.top());
  CHECK_FALSE(jh.uniform);
  CHECK(jh.shortest == 2);
  CHECK(jh.longest == 3);
  REQUIRE(jh.witness.has_value());
  CHECK(jh.witness->first.length() == 2);
  CHECK(jh.witness->second.length() == 3);

  // 0 < c < 1 is maximal-looking but refinable by a.
  const Chain short_chain{{0, 3, 4}};
  CHECK(refining_element(n5, short_chain) == std::optional<std::size_t>(1));
  CHECK_FALSE(is_refinable(n5, Chain{{0, 1, 3, 4}}));
  CHECK(refines(n5, Chain{{0, 1, 3, 4}}, short_chain));
  CHECK_THROWS_AS(refines(n5, Chain{{1, 3, 4}}, short_chain), InvalidArgument);

  CHECK(k_maximal_elements(n5, 0) == std::vector<std::size_t>{4});
  CHECK(k_maximal_elements(n5, 1) == std::vector<std::size_t>{2, 3});
  CHECK(k_maximal_elements(n5, 2) == std::vector<std::size_t>{1});
  CHECK(k_maximal_elements(n5, 3).empty());
}

TEST_CASE("diamond M3") {
  const auto m3 = diamond_m3();
  CHECK(is_modular(m3));
  CHECK(is_semimodular(m3));
  CHECK(is_dually_semimodular(m3));
  const auto d = check_distributive(m3);
  CHECK_FALSE(d.holds);
  CHECK(d.witness.size() == 3);
  CHECK(jordan_holder_everywhere(m3));
  CHECK(check_birkhoff(m3).holds);
  CHECK(check_dual_birkhoff(m3).holds);
}

TEST_CASE("centered hexagon is semimodular but not dually semimodular") {
  const auto s7 = centered_hexagon_s7();
  CHECK(s7.size() == 7);
  CHECK(is_semimodular(s7));
  CHECK_FALSE(is_dually_semimodular(s7));
  CHECK_FALSE(is_modular(s7));
  CHECK(jordan_holder_everywhere(s7));
}

TEST_CASE("distributive lattices") {
  CHECK(is_distributive(boolean_lattice(4)));
  CHECK(is_distributive(divisor_lattice(360)));
  CHECK(is_distributive(chain_lattice(5)));
  CHECK(height(boolean_lattice(4)) == 4);
  CHECK(height(chain_lattice(5)) == 4);
}

TEST_CASE("maximal chains") {
  const auto b3 = boolean_lattice(3);
  const auto chains = maximal_chains(b3, b3.bottom(), b3.top());
  CHECK(chains.size() == 6);
  for (const auto& c : chains) CHECK(c.length() == 3);
  CHECK(std::is_sorted(chains.begin(), chains.end(),
                       [](const Chain& x, const Chain& y) { return x.elements < y.elements; }));
  Limits tight;
  tight.max_chains = 5;
  CHECK_THROWS_AS(maximal_chains(b3, b3.bottom(), b3.top(), tight), ResourceLimit);
  CHECK_THROWS_AS(maximal_chains(b3, b3.top(), b3.bottom()), InvalidArgument);
  CHECK(maximal_chains(b3, 0, 0).size() == 1);
}

TEST_CASE("isomorphism, intervals and products") {
  CHECK(are_isomorphic(product_lattice(chain_lattice(2), chain_lattice(2)), boolean_lattice(2)));
  CHECK(are_isomorphic(divisor_lattice(30), boolean_lattice(3)));
  CHECK_FALSE(are_isomorphic(diamond_m3(), pentagon_n5()));
  CHECK_FALSE(are_isomorphic(chain_lattice(3), chain_lattice(4)));

  const auto m = are_isomorphic(divisor_lattice(12), product_lattice(chain_lattice(3), chain_lattice(2)));
  REQUIRE(m.has_value());
  const auto d12 = divisor_lattice(12);
  const auto p = product_lattice(chain_lattice(3), chain_lattice(2));
  for (std::size_t a = 0; a < d12.size(); ++a)
    for (std::size_t b = 0; b < d12.size(); ++b) CHECK(d12.leq(a, b) == p.leq((*m)[a], (*m)[b]));

  const auto b3 = boolean_lattice(3);
  const auto iv = interval(b3, b3.bottom(), b3.lower_covers(b3.top()).front());
  CHECK(are_isomorphic(iv, boolean_lattice(2)));

  Limits tight;
  tight.isomorphism = 4;
  CHECK_THROWS_AS(are_isomorphic(boolean_lattice(3), boolean_lattice(3), tight), ResourceLimit);
}

TEST_CASE("big meets and joins of the empty set") {
  const auto b2 = boolean_lattice(2);
  CHECK(b2.big_meet({}) == b2.top());
  CHECK(b2.big_join({}) == b2.bottom());
  const std::vector<std::size_t> atoms = b2.upper_covers(b2.bottom());
  CHECK(b2.big_join(atoms) == b2.top());
  CHECK(b2.big_meet(atoms) == b2.bottom());
}
