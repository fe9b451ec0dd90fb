#pragma once

#include <string>
#include <vector>

#include "genwait/analysis.hpp"

namespace genwait {

// Built-in verification corpus: cyclic, elementary abelian, dihedral,
// quaternion, symmetric/alternating families, direct products, the
// inverting-involution semidirect products, and a linear-group example.
const std::vector<std::string>& builtin_catalog();

// Shell-style glob with '*' and '?'.
bool glob_match(const std::string& pattern, const std::string& text);

struct CatalogResult {
  std::vector<Report> reports;   // in catalog order
  int failed_verdicts = 0;
  std::string summary_csv() const;
};

// Analyzes every catalog entry matching `filter` ("" keeps all).
// Entries are independent; they may be analyzed concurrently, but the
// result order is the catalog order.
CatalogResult run_catalog(const std::string& filter, const AnalyzeOptions& opt);

}  // namespace genwait
