#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intspec/genfun.hpp"
#include "intspec/pedestal.hpp"

namespace intspec {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int draws = 5;
  int truncation = kDefaultTruncation;
  int bijection_truncation = 12;
  // Band identities run over all pairs (and triples) while the count stays
  // under these limits; beyond them a seeded sample of that size is used.
  std::size_t pair_limit = 4'000'000;
  std::size_t triple_limit = 200'000;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed = false;
};

/// Runs every module invariant on one poset. Failures are recorded, never thrown.
VerifyReport run_verification(const PedestalMatrix& pm, const VerifyOptions& options);

}  // namespace intspec
