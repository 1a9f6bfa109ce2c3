#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "toplat/group.hpp"
#include "toplat/lattice.hpp"
#include "toplat/pontryagin.hpp"

namespace toplat {

// {"order": n, "table": [[...]], "names": [...], "label": "..."}; names and
// label optional. A string is read as a mini-language spec.
FiniteGroup group_from_json(const nlohmann::json& j, const Limits& limits = {});
nlohmann::json group_to_json(const FiniteGroup& g);

// Either {"size": n, "leq": [[0/1 ...]]} or {"size": n, "covers": [[lo, hi], ...]},
// with optional "labels". Covers are closed reflexively and transitively.
FiniteLattice lattice_from_json(const nlohmann::json& j);

// {"group": spec or table object, "sets": [[indices], ...]}
NeighborhoodFamily family_from_json(const nlohmann::json& j, const Limits& limits = {});

nlohmann::json read_json_file(const std::string& path);

// Hasse diagram, bottom at the bottom, one rank per chain length from bottom.
void write_dot(std::ostream& out, const FiniteLattice& l, const std::string& title);

}  // namespace toplat
