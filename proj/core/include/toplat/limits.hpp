#pragma once

#include <cstddef>

namespace toplat {

// Size caps shared by the enumerating operations. Every enumerating
// operation refuses with ResourceLimit instead of degrading.
struct Limits {
  // Largest group any constructor will build.
  static constexpr std::size_t kHardMaxOrder = 512;
  // Largest lattice build_lattice accepts.
  static constexpr std::size_t kHardMaxLatticeSize = 20000;

  std::size_t max_order = kHardMaxOrder;
  // Associativity is verified for tables up to this order.
  std::size_t associativity_check = 128;
  // all_subgroups refuses above this order.
  std::size_t enumeration = 128;
  // maximal_chains refuses past this many chains.
  std::size_t max_chains = 1'000'000;
  // are_isomorphic refuses lattices larger than this.
  std::size_t isomorphism = 128;
  // prodanov_lattice refuses more coatoms than this.
  std::size_t max_coatoms = 20;

  // Defaults adjusted by the TOPLAT_MAX_ORDER environment variable, which
  // raises or lowers the enumeration cap but never past kHardMaxOrder.
  static Limits from_environment();
};

}  // namespace toplat
