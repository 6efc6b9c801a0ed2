#pragma once
// Machine-checked registry of the structural facts behind the enumeration
// result.  Each entry re-runs the underlying case analysis: predicate entries
// scan every found solution, composition entries run border-constrained
// searches over every matching pattern and require them empty, and the
// size-16 structural entries inspect the borders of the size-16 solutions.

#include <map>
#include <string>
#include <vector>

#include "sqsq/enumerate.hpp"

namespace sqsq {

struct LemmaInfo {
  std::string id;
  std::string claim;  // one-line statement of the fact being checked
};

// Fixed, versioned registry: L1..L13, L_no43535, L16_three, L16_four.
const std::vector<LemmaInfo>& lemma_registry();
bool is_known_lemma(const std::string& id);

struct LemmaReport {
  std::string id;
  std::string claim;
  unsigned max_n = 0;
  bool pass = false;
  std::vector<std::string> checks;     // per-check log lines
  std::vector<std::string> witnesses;  // counterexamples when failing
};

// Memoized full enumerations shared across lemma checks (several entries need
// the same sweeps).  Not thread-safe; use one per verification run.
struct SearchCache {
  unsigned workers = 1;
  std::map<unsigned, EnumerationReport> by_n;
  const EnumerationReport& full(unsigned n);
};

// Verify one registry entry for all applicable sizes up to max_n (<= 17 is
// the supported range; larger values work but are increasingly expensive).
// Throws std::invalid_argument for unknown ids.
LemmaReport verify_lemma(const std::string& id, unsigned max_n,
                         SearchCache* cache = nullptr);

}  // namespace sqsq
