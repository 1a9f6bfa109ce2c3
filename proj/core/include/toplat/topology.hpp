#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "toplat/group.hpp"
#include "toplat/lattice.hpp"

namespace toplat {

// A group topology on a finite group, identified with its kernel: the
// normal subgroup that is the smallest open set containing the identity.
// Open sets are exactly the unions of kernel cosets.
class GroupTopology {
 public:
  // Throws InvalidArgument when kernel is not normal.
  explicit GroupTopology(SubgroupSet kernel);

  static GroupTopology discrete(const FiniteGroup& g);
  static GroupTopology anti_discrete(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return kernel_.group(); }
  const SubgroupSet& kernel() const noexcept { return kernel_; }
  bool is_discrete() const noexcept { return kernel_.size() == 1; }
  bool is_anti_discrete() const noexcept { return kernel_.size() == group().order(); }
  // On a finite group Hausdorff means discrete.
  bool is_hausdorff() const noexcept { return is_discrete(); }
  bool is_open(const ElementSet& s) const;
  // sigma.coarser_or_equal(tau): every sigma-open set is tau-open.
  bool coarser_or_equal(const GroupTopology& finer) const {
    return finer.kernel_.members().is_subset_of(kernel_.members());
  }

  friend bool operator==(const GroupTopology& a, const GroupTopology& b) noexcept {
    return a.kernel_ == b.kernel_;
  }

 private:
  SubgroupSet kernel_;
};

// The lattice L_G of all group topologies on g: one topology per normal
// subgroup, tau_H <= tau_K iff K is a subset of H. Index 0 is the discrete
// topology (top), the last index the anti-discrete one (bottom). Joins
// intersect kernels and meets multiply them; both are verified when the
// lattice is built.
class TopologyLattice {
 public:
  explicit TopologyLattice(const FiniteGroup& g, const Limits& limits = {});

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return topologies_.size(); }
  const GroupTopology& topology(std::size_t i) const { return topologies_[i]; }
  const std::vector<GroupTopology>& topologies() const noexcept { return topologies_; }
  const ElementSet& kernel(std::size_t i) const { return topologies_[i].kernel().members(); }
  const FiniteLattice& lattice() const noexcept { return lattice_; }

  std::optional<std::size_t> find(const ElementSet& kernel) const;
  // Throws InvalidArgument if kernel is not a normal subgroup of group().
  std::size_t index_of(const ElementSet& kernel) const;

  std::size_t discrete() const noexcept { return lattice_.top(); }
  std::size_t anti_discrete() const noexcept { return lattice_.bottom(); }

 private:
  FiniteGroup group_;
  std::vector<GroupTopology> topologies_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  FiniteLattice lattice_;
};

inline TopologyLattice topology_lattice(const FiniteGroup& g, const Limits& limits = {}) {
  return TopologyLattice(g, limits);
}

// Kernel rendered as "{a,b,...}" with element names.
std::string kernel_label(const FiniteGroup& g, const ElementSet& kernel);

// --- operators ----------------------------------------------------------------

struct RestrictedTopology {
  Embedding subgroup;
  GroupTopology topology;  // on subgroup.group
};
// Subspace topology on n: kernel tau.kernel ^ n. Throws InvalidArgument if
// n belongs to another group.
RestrictedTopology restrict(const GroupTopology& tau, const SubgroupSet& n);

struct QuotientTopology {
  Quotient quotient;
  GroupTopology topology;  // on quotient.group
};
// tau/N with kernel the image of tau.kernel * N. Throws InvalidArgument
// unless n is normal.
QuotientTopology quotient_topology(const GroupTopology& tau, const SubgroupSet& n);

// The topology with identity basis {UN : U open, e in U}; kernel tau.kernel * N.
GroupTopology saturate(const GroupTopology& tau, const SubgroupSet& n);

// L_N together with the map from kernels of G to restricted kernels.
class RestrictionView {
 public:
  RestrictionView(const SubgroupSet& n, const Limits& limits = {});
  const TopologyLattice& lattice() const noexcept { return lattice_; }
  // Index in lattice() of tau|_N for the topology of G with this kernel.
  std::size_t index_of_restriction(const ElementSet& kernel) const;

 private:
  SubgroupSet n_;
  Embedding embedding_;
  TopologyLattice lattice_;
};

// L_{G/N} together with the map from kernels of G to quotient kernels.
class QuotientView {
 public:
  QuotientView(const SubgroupSet& n, const Limits& limits = {});
  const TopologyLattice& lattice() const noexcept { return lattice_; }
  const Quotient& quotient() const noexcept { return quotient_; }
  std::size_t index_of_quotient(const ElementSet& kernel) const;

 private:
  Quotient quotient_;
  TopologyLattice lattice_;
};

// --- verification harnesses ---------------------------------------------------

struct VerificationReport {
  std::string name;
  std::string group;
  std::size_t checked = 0;
  std::size_t violations = 0;
  nlohmann::json witness;  // first violation, kernels as member lists

  bool passed() const noexcept { return violations == 0; }
  nlohmann::json to_json() const;
};

// sigma <= tau, sigma|_N = tau|_N and sigma/N = tau/N force sigma = tau, for
// every subgroup N (normal or not). For non-normal N the quotients are
// compared as partitions of G into cosets of kernel * N.
VerificationReport verify_merzon(const FiniteGroup& g, const Limits& limits = {});

// (sigma v tau)|_N = sigma|_N v tau|_N for every subgroup N.
VerificationReport verify_restriction_join(const FiniteGroup& g, const Limits& limits = {});
// (sigma ^ tau)/N = sigma/N ^ tau/N for every normal N.
VerificationReport verify_quotient_meet(const FiniteGroup& g, const Limits& limits = {});
// (sigma v tau*)/N = sigma/N v tau/N for every normal N, tau* = saturate(tau, N).
VerificationReport verify_saturation_join(const FiniteGroup& g, const Limits& limits = {});

// For every cover sigma < tau: sigma/N <=. tau/N for normal N and
// sigma|_N <=. tau|_N for central N. For central N and sigma <= tau: sigma
// is covered by tau iff exactly one of
//   (a) sigma|_N = tau|_N and sigma/N covered by tau/N,
//   (b) sigma|_N covered by tau|_N and sigma/N = tau/N
// holds; the same with every cover relaxed to "covered or equal".
VerificationReport verify_cover_transfer(const FiniteGroup& g, const Limits& limits = {});

// Central N, sigma/N <= tau/N: the meet's kernel is the set product of
// the two kernels.
VerificationReport verify_meet_basis(const FiniteGroup& g, const Limits& limits = {});

// Central N: L_G semimodular iff L_{G/N} semimodular, and the interval
// [anti-discrete, tau_N] is isomorphic to L_{G/N}, both through the
// projection and by independent isomorphism search.
VerificationReport verify_semimodular_transfer(const FiniteGroup& g, const Limits& limits = {});

struct ProductDecomposition {
  // gcd(exponent(left factor), |right factor|) = 1.
  bool coprime = false;
  bool is_product = false;
  std::optional<GroupTopology> left;
  std::optional<GroupTopology> right;
  // Kernel element outside (K ^ H)(K ^ F) when the topology is no product.
  std::optional<Element> witness;
};

// Splits a topology on a marked direct product H x F into factor topologies.
// Under the coprime hypothesis the kernel parts are extracted through
// coprime powers of each kernel element. Throws InvalidArgument when the
// group is not a marked product.
ProductDecomposition decompose_product_topology(const GroupTopology& tau);

// Every topology decomposes, L_G is isomorphic to L_H x L_F and modular.
VerificationReport verify_product_decomposition(const FiniteGroup& g, const Limits& limits = {});

struct ProdanovReport {
  std::vector<std::size_t> coatoms;  // A_1 as lattice indices
  std::vector<std::size_t> meets;    // tau_B for every subset mask B of coatoms
  std::vector<std::uint32_t> closures;
  std::vector<std::size_t> elements;  // P_G, ascending lattice indices
  bool sublattice = true;
  bool join_is_least_upper_bound = true;
  bool contains_k_maximal = true;
  std::vector<std::size_t> k_maximal_outside;
  std::vector<std::uint32_t> non_closed;  // masks B with closure(B) != B

  std::uint32_t closure(std::uint32_t mask) const { return closures[mask]; }
  // tau_B v_p tau_C = tau_{closure(B) ^ closure(C)}.
  std::size_t prodanov_join(std::uint32_t b, std::uint32_t c) const { return meets[closures[b] & closures[c]]; }
  bool freely_generated() const noexcept { return non_closed.empty(); }
  nlohmann::json to_json(const TopologyLattice& tl) const;
};

// Throws ResourceLimit above limits.max_coatoms coatoms.
ProdanovReport prodanov_lattice(const TopologyLattice& tl, const Limits& limits = {});

struct AnalysisReport {
  std::string group;
  std::size_t order = 0;
  bool abelian = false;
  std::optional<std::size_t> nilpotency_class;
  std::size_t topologies = 0;
  Verdict modular;
  Verdict distributive;
  Verdict semimodular;
  Verdict dually_semimodular;
  Verdict birkhoff;
  Verdict dual_birkhoff;
  JordanHolderReport chains;  // full interval
  std::size_t height = 0;
  std::vector<std::vector<std::size_t>> k_maximal;  // A_0 .. A_height
  // abelian => modular; nilpotent => semimodular with uniform chains.
  bool invariants_hold = true;

  nlohmann::json to_json(const TopologyLattice& tl) const;
};

AnalysisReport analyze(const TopologyLattice& tl);

}  // namespace toplat
