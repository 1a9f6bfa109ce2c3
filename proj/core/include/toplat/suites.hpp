#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toplat/corpus.hpp"
#include "toplat/limits.hpp"

namespace toplat {

struct SuiteOptions {
  // Largest group order swept; each suite has its own default.
  std::optional<std::size_t> max_order;
  // Point count for toplattice-classical.
  std::size_t n = 3;
  // Replaces the built-in corpus (or, for th0-product and prodanov, the
  // built-in group list).
  std::optional<std::vector<CorpusEntry>> corpus;
  Limits limits;
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::size_t groups = 0;
  std::size_t checked = 0;
  std::size_t violations = 0;
  nlohmann::json details = nlohmann::json::array();

  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument on an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace toplat
