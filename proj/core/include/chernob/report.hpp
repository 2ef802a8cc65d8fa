#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chernob/colength.hpp"
#include "chernob/problem.hpp"

namespace chernob {

// Everything a command run produces. Machine (JSON) and text renderings
// carry identical numeric content; wall time is measured but reported on
// the diagnostic stream only, so renderings stay byte-identical for a
// fixed (file, seed, flags) triple.
struct RunReport {
  std::string command;
  ProblemFile problem;
  std::uint64_t seed = 0;

  std::optional<Colength> alg_index;
  std::optional<Colength> baseline;
  std::optional<long long> chern;
  bool negative_flag = false;
  std::vector<std::uint64_t> trial_values;

  std::optional<std::uint64_t> oracle_count;
  std::vector<std::uint64_t> per_deformation_counts;

  std::vector<std::string> scheme_generators;
  std::vector<std::string> leading_ideal;
  std::optional<Colength> scheme_colength;

  std::optional<bool> pass;
  std::optional<std::string> failure_cause;

  double wall_time_ms = 0.0;
};

std::string render_machine(const RunReport& report);
std::string render_text(const RunReport& report);

}  // namespace chernob
