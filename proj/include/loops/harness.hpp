#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "loops/identities.hpp"
#include "loops/tables.hpp"

namespace loops {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct HarnessConfig {
  std::uint64_t seed = kDefaultSeed;
  int samples = 200;          // h samples when exhaustive enumeration is off
  int random_diags = 50;      // extra random diagonals per h
  bool order4 = true;         // include the order-4 Steiner loop
  bool fano = true;           // include the Fano-plane Steiner loop
  std::vector<std::string> groups = {"Z2", "Z4", "Z2^2", "Z8", "S3", "S4"};
  size_t max_recorded = 100;  // counterexamples kept verbatim in the report
};

struct HarnessCounterexample {
  std::string kind;  // "iff" | "invariant" | "star" | "structure"
  std::string s_name, a_name, variant, identity;
  std::vector<Elem> h, diag;
  bool brute = false, criterion = false;
};

struct HarnessReport {
  std::uint64_t seed = 0;
  long long instances = 0;
  long long comparisons = 0;
  long long star_instances = 0;
  long long structure_instances = 0;
  std::map<std::string, long long> classification_counts;
  std::map<std::string, long long> per_cell_instances;  // "S/A" -> count
  long long counterexample_count = 0;
  std::vector<HarnessCounterexample> counterexamples;

  bool ok() const { return counterexample_count == 0; }
};

HarnessReport run_harness(const HarnessConfig& cfg);

// Deterministic rendering (fixed key order, no whitespace variance).
std::string report_to_json(const HarnessReport& r);

}  // namespace loops
