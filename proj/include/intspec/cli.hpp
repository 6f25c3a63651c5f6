#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "intspec/genfun.hpp"
#include "intspec/poset.hpp"

namespace intspec {

struct RunConfig {
  std::string command;  // extensions | matrix | eigen | verify | genfun | count-posets
  std::optional<std::string> partition;
  std::optional<std::string> covers;  // path to a poset JSON file
  std::optional<std::string> box;
  std::string view = "symbolic";  // symbolic | monomial
  std::string format = "text";    // text | json | csv
  std::uint64_t seed = 0;
  int tmax = kDefaultTruncation;
  int draws = 5;
  std::size_t cap = kDefaultExtensionCap;
  std::optional<std::string> jordan;  // eigen: "00=5,01=1,10=-2"
  int count_n = 4;                    // count-posets
};

/// Exactly one of partition / covers / box must be set.
Poset load_poset(const RunConfig& config);

/// Runs one subcommand. Returns 0 on success, 1 when a verification failed
/// and 2 on an input or library error (reported on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace intspec
