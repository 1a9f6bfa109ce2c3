#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toplat/element_set.hpp"
#include "toplat/limits.hpp"

namespace toplat {

using Element = std::uint32_t;

namespace detail {

struct GroupData {
  std::size_t order = 1;
  std::vector<Element> table{0};  // row-major, table[a * order + b] = a*b
  Element identity = 0;
  std::vector<Element> inverse{0};
  std::vector<std::uint32_t> element_order{1};
  bool abelian = true;
  std::vector<std::string> names;
  std::string label = "Z 1";
  // Factor groups retained by direct_product; element (g, h) has index
  // g * |right| + h.
  std::shared_ptr<const GroupData> left;
  std::shared_ptr<const GroupData> right;
};

}  // namespace detail

// A finite group given by its Cayley table over element indices 0..n-1.
//
// Immutable; copies share the table. Every instance satisfies the Latin
// square, identity and inverse invariants; associativity is verified at
// construction for tables up to Limits::associativity_check.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates every group invariant, throwing InvalidArgument on failure.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table,
                                std::vector<std::string> names = {},
                                const Limits& limits = {});

  std::size_t order() const noexcept { return d_->order; }
  Element identity() const noexcept { return d_->identity; }
  Element mul(Element a, Element b) const noexcept { return d_->table[a * d_->order + b]; }
  Element inverse(Element a) const noexcept { return d_->inverse[a]; }
  std::uint32_t element_order(Element a) const noexcept { return d_->element_order[a]; }
  Element power(Element a, long long k) const noexcept;
  Element conjugate(Element x, Element by) const noexcept {
    return mul(mul(by, x), inverse(by));
  }

  bool is_abelian() const noexcept { return d_->abelian; }
  std::string name(Element a) const;
  const std::string& label() const noexcept { return d_->label; }
  FiniteGroup with_label(std::string label) const;

  // Direct products built by direct_product remember their factors.
  bool is_marked_product() const noexcept { return d_->left != nullptr; }
  std::optional<std::pair<FiniteGroup, FiniteGroup>> factors() const;

  bool same_as(const FiniteGroup& other) const noexcept { return d_ == other.d_; }

  // For builders whose tables are correct by construction: no table
  // validation, only the derived data (inverses, orders) is filled in.
  static FiniteGroup from_trusted(detail::GroupData data);

 private:
  friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&, const Limits&);
  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::GroupData> d_;
};

// Subset of a group closed under product and inverse.
class SubgroupSet {
 public:
  // Throws InvalidArgument if members is not a subgroup of g.
  SubgroupSet(FiniteGroup g, ElementSet members);

  static SubgroupSet trivial(const FiniteGroup& g);
  static SubgroupSet whole(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return group_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return size_; }
  bool contains(Element x) const noexcept { return members_.contains(x); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) noexcept {
    return a.members_ == b.members_;
  }
  friend bool operator<(const SubgroupSet& a, const SubgroupSet& b) noexcept {
    return a.members_ < b.members_;
  }

  struct Unchecked {};
  // Skips validation; for callers that produced members by closure.
  SubgroupSet(Unchecked, FiniteGroup g, ElementSet members)
      : group_(std::move(g)), members_(std::move(members)), size_(members_.size()) {}

 private:
  FiniteGroup group_;
  ElementSet members_;
  std::size_t size_ = 0;
};

// Structure-preserving map between two finite groups, verified on
// construction.
class GroupHomomorphism {
 public:
  GroupHomomorphism(FiniteGroup source, FiniteGroup target, std::vector<Element> map);

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  Element operator()(Element x) const noexcept { return map_[x]; }
  std::span<const Element> map() const noexcept { return map_; }

  ElementSet image(const ElementSet& s) const;
  ElementSet preimage(const ElementSet& s) const;
  SubgroupSet kernel() const;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> map_;
};

// --- constructors ----------------------------------------------------------

FiniteGroup make_cyclic(std::size_t n, const Limits& limits = {});
FiniteGroup make_elementary_abelian(std::size_t p, std::size_t k, const Limits& limits = {});
// Dihedral group of order 2n.
FiniteGroup make_dihedral(std::size_t n, const Limits& limits = {});
FiniteGroup make_quaternion();
// Upper unitriangular 3x3 matrices over Z(p), p prime.
FiniteGroup make_heisenberg(std::size_t p, const Limits& limits = {});
FiniteGroup make_symmetric(std::size_t n, const Limits& limits = {});
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

bool is_prime(std::size_t n) noexcept;

// --- subgroup machinery -----------------------------------------------------

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
SubgroupSet subgroup_generated(const FiniteGroup& g, const ElementSet& seed);
SubgroupSet subgroup_generated(const FiniteGroup& g, std::span<const Element> seed);

// Every subgroup, duplicate free, in canonical order. Throws ResourceLimit
// above limits.enumeration (never above Limits::kHardMaxOrder).
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

bool is_normal(const SubgroupSet& h);
// Throws InvalidArgument when s is not a subgroup of g.
bool is_normal(const FiniteGroup& g, const ElementSet& s);
std::vector<SubgroupSet> all_normal_subgroups(const FiniteGroup& g, const Limits& limits = {});

bool is_central(const SubgroupSet& h);

// {ab : a in A, b in B}.
ElementSet product_set(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

struct Quotient {
  FiniteGroup group;
  GroupHomomorphism projection;
  // Least element index of each coset, indexed by quotient element.
  std::vector<Element> representatives;
};

// Throws InvalidArgument when n is not normal.
Quotient quotient(const SubgroupSet& n);

// A subgroup realised as a group in its own right; inclusion maps
// subgroup indices (ascending parent indices) into the parent.
struct Embedding {
  FiniteGroup group;
  GroupHomomorphism inclusion;
  // Parent element -> subgroup element, for parent elements inside.
  std::vector<std::optional<Element>> restriction;
};

Embedding subgroup_as_group(const SubgroupSet& h);

// Canonical images of the factors of a marked direct product. Throws
// InvalidArgument if g was not built by direct_product.
std::pair<SubgroupSet, SubgroupSet> factor_embeddings(const FiniteGroup& g);

// --- nilpotency data --------------------------------------------------------

SubgroupSet center(const FiniteGroup& g);
SubgroupSet commutator_subgroup(const FiniteGroup& g);
// Z_0 = {e} < Z_1 < ... until it reaches G or stalls.
std::vector<SubgroupSet> upper_central_series(const FiniteGroup& g);
// Nilpotency class, or nullopt when g is not nilpotent.
std::optional<std::size_t> nilpotency_class(const FiniteGroup& g);

struct ElementOrders {
  std::size_t exponent = 1;
  std::vector<std::uint32_t> orders;
};
ElementOrders exponent_and_element_orders(const FiniteGroup& g);

// x^m together with k such that (x^m)^k = x. Requires gcd(ord(x), m) = 1,
// otherwise throws PreconditionError.
struct CoprimeWitness {
  Element power = 0;
  std::uint64_t exponent = 1;
};
CoprimeWitness coprime_component(const FiniteGroup& g, Element x, long long m);

// The unique y in <z> with y^m = z. Requires gcd(ord(z), m) = 1.
Element coprime_root(const FiniteGroup& g, Element z, long long m);

}  // namespace toplat
