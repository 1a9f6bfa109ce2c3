#include "toplat/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace toplat {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* v = std::getenv("TOPLAT_MAX_ORDER")) {
    try {
      const auto n = std::stoull(v);
      if (n > 0) limits.enumeration = std::min<std::size_t>(n, kHardMaxOrder);
    } catch (const std::exception&) {
      // Unparsable values leave the default in place.
    }
  }
  return limits;
}

}  // namespace toplat
