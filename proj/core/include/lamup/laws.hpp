#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "lamup/generator.hpp"

// The equational laws of the calculus plus the oracle cross-checks, run
// as seeded property suites. Shared by the CLI `props` command and the
// acceptance tests so both always agree on what is being checked.

namespace lamup {

struct LawResult {
  std::string law;
  std::size_t cases = 0;
  bool ok = true;
  std::string counterexample;  // first failure, concrete syntax
  double seconds = 0.0;        // measured, never printed
};

struct LawsConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  GenConfig gen;
};

std::vector<LawResult> run_law_suites(const LawsConfig& cfg);

// Deterministic: identical config gives byte-identical text.
void write_report(std::ostream& os, const LawsConfig& cfg,
                  const std::vector<LawResult>& results);

bool all_ok(const std::vector<LawResult>& results);

}  // namespace lamup
