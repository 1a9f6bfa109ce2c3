#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "toplat/group.hpp"

namespace toplat {

// Group mini-language:
//   Z n          cyclic of order n            (also Z3, Z(3))
//   Z^k p k      elementary abelian Z(p)^k    (also Z2^3, Z(2)^3; Z4^2 = Z4 x Z4)
//   D n          dihedral of order 2n
//   Q8           quaternion group
//   Heis p       Heisenberg group mod p
//   S n          symmetric group
// Factors are joined by x, * or the multiplication sign and folded left.
// Throws InvalidArgument on a malformed spec.
FiniteGroup parse_group(std::string_view spec, const Limits& limits = {});

struct CorpusEntry {
  std::string name;
  std::string spec;
  FiniteGroup group;
};

// One spec per line, optionally "name = spec"; '#' starts a comment.
std::vector<CorpusEntry> read_corpus(std::istream& in, const Limits& limits = {});
std::vector<CorpusEntry> load_corpus_file(const std::string& path, const Limits& limits = {});

// The default corpus: cyclic groups up to 64, elementary and mixed abelian
// groups up to 64, dihedral, quaternion, Heisenberg and symmetric groups
// and a few direct products.
const std::vector<CorpusEntry>& builtin_corpus();

}  // namespace toplat
