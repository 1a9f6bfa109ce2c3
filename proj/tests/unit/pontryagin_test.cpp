#include <doctest.h>

#include "toplat/error.hpp"
#include "toplat/pontryagin.hpp"

using namespace toplat;

TEST_CASE("discrete family") {
  const auto s3 = make_symmetric(3);
  const NeighborhoodFamily b(s3, {ElementSet(6, {s3.identity()})});
  const auto r = check_conditions(b);
  for (const auto& c : r.conditions) CHECK(c.holds);
  CHECK(generate_topology(b).is_discrete());
}

TEST_CASE("anti-discrete family") {
  const auto s3 = make_symmetric(3);
  const NeighborhoodFamily b(s3, {ElementSet::full(6)});
  const auto r = check_conditions(b);
  CHECK(r.is_basis());
  CHECK_FALSE(r.is_hausdorff());
  CHECK(generate_topology(b).is_anti_discrete());
}

TEST_CASE("non-normal subgroup fails conjugation with a witness outside the normaliser") {
  const auto s3 = make_symmetric(3);
  for (const auto& h : all_subgroups(s3)) {
    if (h.size() != 2) continue;
    const NeighborhoodFamily b(s3, {h.members()});
    const auto r = check_conditions(b);
    CHECK(r.conditions[0].holds);
    CHECK(r.conditions[1].holds);
    CHECK(r.conditions[2].holds);
    CHECK(r.conditions[4].holds);
    REQUIRE_FALSE(r.conditions[3].holds);
    REQUIRE(r.conditions[3].element.has_value());
    const Element x = *r.conditions[3].element;
    // x does not normalise h, and x is the least such element.
    auto normalises = [&](Element y) {
      bool ok = true;
      h.members().for_each([&](std::size_t v) { ok = ok && h.contains(s3.conjugate(static_cast<Element>(v), y)); });
      return ok;
    };
    CHECK_FALSE(normalises(x));
    for (Element y = 0; y < x; ++y) CHECK(normalises(y));
    CHECK_THROWS_AS(generate_topology(b), PontryaginViolation);
  }
}

TEST_CASE("a non-closed set fails (i)") {
  const auto z3 = make_cyclic(3);
  const NeighborhoodFamily b(z3, {ElementSet(3, {0, 1})});
  const auto r = check_conditions(b);
  CHECK_FALSE(r.conditions[0].holds);
  CHECK(r.conditions[0].set == std::optional<std::size_t>(0));
  try {
    generate_topology(b);
    FAIL("expected a violation");
  } catch (const PontryaginViolation& e) {
    CHECK_FALSE(e.report().is_basis());
  }
}

TEST_CASE("intersection of a basis is the kernel") {
  const auto s3 = make_symmetric(3);
  ElementSet a3(6);
  for (Element x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) a3.insert(x);
  const NeighborhoodFamily b(s3, {a3, ElementSet::full(6)});
  const auto t = generate_topology(b);
  CHECK(t.kernel().members() == a3);
}

TEST_CASE("family validation") {
  const auto z4 = make_cyclic(4);
  CHECK_THROWS_AS(NeighborhoodFamily(z4, {}), InvalidArgument);
  CHECK_THROWS_AS(NeighborhoodFamily(z4, {ElementSet(4, {1})}), InvalidArgument);
  CHECK_THROWS_AS(NeighborhoodFamily(z4, {ElementSet(5, {0})}), InvalidArgument);
}

TEST_CASE("hausdorff iff discrete on every normal subgroup family") {
  const auto d4 = make_dihedral(4);
  for (const auto& n : all_normal_subgroups(d4)) {
    const NeighborhoodFamily b(d4, {n.members()});
    const auto r = check_conditions(b);
    CHECK(r.is_basis());
    CHECK(r.is_hausdorff() == generate_topology(b).is_discrete());
    CHECK(generate_topology(b).kernel() == n);
  }
}

TEST_CASE("report json mirrors conditions") {
  const auto z3 = make_cyclic(3);
  const auto j = check_conditions(NeighborhoodFamily(z3, {ElementSet(3, {0, 1})})).to_json();
  CHECK(j["i"]["holds"] == false);
  CHECK(j["i"]["U"] == 0);
  CHECK(j.contains("vi"));
  CHECK(j["basis"] == false);
}
