#include <doctest.h>

#include "oracles.hpp"
#include "toplat/corpus.hpp"
#include "toplat/error.hpp"
#include "toplat/topology.hpp"

using namespace toplat;

namespace {

std::size_t normal_count_oracle(const FiniteGroup& g) {
  std::size_t n = 0;
  for (const auto& s : oracle::subgroups_by_subsets(g))
    if (oracle::normal(g, s)) ++n;
  return n;
}

}  // namespace

TEST_CASE("lattice sizes equal the number of normal subgroups") {
  for (const auto& g : {make_cyclic(6), make_symmetric(3), make_quaternion(), make_dihedral(4),
                        make_elementary_abelian(2, 2), make_dihedral(5), make_cyclic(12)}) {
    CAPTURE(g.label());
    const TopologyLattice tl(g);
    CHECK(tl.size() == normal_count_oracle(g));
    CHECK(tl.topology(tl.discrete()).is_discrete());
    CHECK(tl.topology(tl.anti_discrete()).is_anti_discrete());
  }
}

TEST_CASE("order is reverse inclusion of kernels") {
  const TopologyLattice tl(make_dihedral(4));
  const auto& l = tl.lattice();
  for (std::size_t i = 0; i < tl.size(); ++i)
    for (std::size_t j = 0; j < tl.size(); ++j) {
      CHECK(l.leq(i, j) == tl.kernel(j).is_subset_of(tl.kernel(i)));
      CHECK(l.leq(i, j) == tl.topology(i).coarser_or_equal(tl.topology(j)));
      CHECK(tl.kernel(l.join(i, j)) == (tl.kernel(i) & tl.kernel(j)));
    }
}

TEST_CASE("group topology basics") {
  const auto s3 = make_symmetric(3);
  const auto d = GroupTopology::discrete(s3);
  CHECK(d.is_hausdorff());
  const auto a = GroupTopology::anti_discrete(s3);
  CHECK_FALSE(a.is_hausdorff());
  CHECK(a.is_open(ElementSet::full(6)));
  CHECK_FALSE(a.is_open(ElementSet(6, {0})));
  CHECK(d.is_open(ElementSet(6, {3})));
  for (const auto& h : all_subgroups(s3))
    if (!is_normal(h)) CHECK_THROWS_AS(GroupTopology{h}, InvalidArgument);
}

TEST_CASE("known lattice shapes") {
  // S3: discrete > A3 > anti-discrete.
  const TopologyLattice s3(make_symmetric(3));
  CHECK(s3.size() == 3);
  CHECK(are_isomorphic(s3.lattice(), chain_lattice(3)));
  // Z2 x Z2: M3.
  const TopologyLattice v4(make_elementary_abelian(2, 2));
  CHECK(are_isomorphic(v4.lattice(), [] {
    return FiniteLattice::build(5, [](std::size_t a, std::size_t b) {
      return a == b || a == 0 || b == 4;
    });
  }()));
  // Z(p^k) gives a chain of length k.
  CHECK(are_isomorphic(TopologyLattice(make_cyclic(27)).lattice(), chain_lattice(4)));
  // Z6: the square.
  CHECK(are_isomorphic(TopologyLattice(make_cyclic(6)).lattice(), boolean_lattice(2)));
}

TEST_CASE("restriction, quotient and saturation") {
  const auto d4 = make_dihedral(4);
  const auto z = center(d4);
  const TopologyLattice tl(d4);
  for (const auto& tau : tl.topologies()) {
    const auto r = restrict(tau, z);
    CHECK(r.subgroup.group.order() == 2);
    CHECK(r.topology.kernel().size() == (tau.kernel().members() & z.members()).size());
    const auto q = quotient_topology(tau, z);
    CHECK(q.quotient.group.order() == 4);
    CHECK(q.topology.kernel().size() * z.size() ==
          product_set(d4, tau.kernel().members(), z.members()).size());
    const auto s = saturate(tau, z);
    CHECK(z.members().is_subset_of(s.kernel().members()));
    CHECK(tau.kernel().members().is_subset_of(s.kernel().members()));
  }
  const auto s3 = make_symmetric(3);
  for (const auto& h : all_subgroups(s3))
    if (!is_normal(h)) {
      CHECK_THROWS_AS(quotient_topology(GroupTopology::discrete(s3), h), InvalidArgument);
      CHECK_THROWS_AS(saturate(GroupTopology::discrete(s3), h), InvalidArgument);
      // Restriction works for every subgroup.
      CHECK(restrict(GroupTopology::discrete(s3), h).topology.is_discrete());
    }
  CHECK_THROWS_AS(restrict(GroupTopology::discrete(s3), z), InvalidArgument);
}

TEST_CASE("verification harnesses pass on small groups") {
  for (const char* spec : {"Z 8", "Z^k 2 3", "D 4", "Q8", "S 3", "D 6", "Z2 x Z4", "Heis 2"}) {
    CAPTURE(spec);
    const auto g = parse_group(spec);
    CHECK(verify_merzon(g).passed());
    CHECK(verify_restriction_join(g).passed());
    CHECK(verify_quotient_meet(g).passed());
    CHECK(verify_saturation_join(g).passed());
    CHECK(verify_cover_transfer(g).passed());
    CHECK(verify_meet_basis(g).passed());
    CHECK(verify_semimodular_transfer(g).passed());
    CHECK(verify_merzon(g).checked > 0);
  }
}

TEST_CASE("product decomposition") {
  const auto g = parse_group("Z3 x Q8");
  const TopologyLattice tl(g);
  for (const auto& tau : tl.topologies()) {
    const auto d = decompose_product_topology(tau);
    CHECK(d.coprime);
    REQUIRE(d.is_product);
    CHECK(d.left->kernel().size() * d.right->kernel().size() == tau.kernel().size());
  }
  CHECK(verify_product_decomposition(g).passed());
  CHECK_THROWS_AS(decompose_product_topology(GroupTopology::discrete(make_cyclic(6))), InvalidArgument);

  // Z2 x Z2 is no product lattice: the diagonal kernel does not split.
  const auto v = parse_group("Z2 x Z2");
  const TopologyLattice tv(v);
  std::size_t non_product = 0;
  for (const auto& tau : tv.topologies()) {
    const auto d = decompose_product_topology(tau);
    CHECK_FALSE(d.coprime);
    if (!d.is_product) {
      ++non_product;
      CHECK(d.witness.has_value());
    }
  }
  CHECK(non_product == 1);
  CHECK_FALSE(verify_product_decomposition(v).passed());
}

TEST_CASE("Prodanov lattice") {
  const TopologyLattice v4(make_elementary_abelian(2, 2));
  const auto p = prodanov_lattice(v4);
  CHECK(p.coatoms.size() == 3);
  CHECK_FALSE(p.freely_generated());
  CHECK(p.closure(0b011) == 0b111);
  CHECK(p.elements.size() == 5);
  CHECK(p.sublattice);
  CHECK(p.join_is_least_upper_bound);

  const TopologyLattice z6(make_cyclic(6));
  const auto q = prodanov_lattice(z6);
  CHECK(q.coatoms.size() == 2);
  CHECK(q.freely_generated());

  const TopologyLattice z9(make_cyclic(9));
  CHECK(prodanov_lattice(z9).freely_generated());

  Limits tight;
  tight.max_coatoms = 2;
  CHECK_THROWS_AS(prodanov_lattice(v4, tight), ResourceLimit);
}

TEST_CASE("analysis report") {
  const TopologyLattice s3(make_symmetric(3));
  const auto a = analyze(s3);
  CHECK(a.topologies == 3);
  CHECK(a.modular.holds);
  CHECK(a.distributive.holds);
  CHECK(a.height == 2);
  CHECK(a.chains.uniform);
  CHECK_FALSE(a.nilpotency_class.has_value());
  CHECK(a.invariants_hold);
  const auto j = a.to_json(s3);
  CHECK(j["topologies"] == 3);
  CHECK(j["k_maximal"].size() == 3);

  const TopologyLattice q8(make_quaternion());
  const auto b = analyze(q8);
  CHECK(b.topologies == 6);
  CHECK(b.semimodular.holds);
  CHECK(b.nilpotency_class == 2);
}
