#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chernob/colength.hpp"
#include "chernob/germs.hpp"
#include "chernob/stdbasis.hpp"

namespace chernob {

// Knobs for the randomized generic-linear baseline.
struct TrialConfig {
  std::uint64_t seed = 0;
  int trials = 3;                   // >= 2 for any certified value
  int coefficient_height = 10'000;  // coefficients drawn from [-H, H]
  int max_resamples = 5;
  EngineLimits limits{};
};

struct BaselineResult {
  Colength value = Colength::infinite();
  std::vector<Colength> certified_trials;  // all equal to `value`
  std::vector<Colength> observed;          // every draw, in draw order
  int resamples = 0;
};

// Ch together with both terms of the defining difference and the trial
// evidence for the baseline.
struct ObstructionReport {
  Colength alg_index = Colength::infinite();
  Colength baseline = Colength::infinite();
  long long chern = 0;
  std::vector<Colength> trial_values;
  std::uint64_t seed = 0;
  // Set when chern < 0: not an error, but worth surfacing (a degenerate
  // omega-side input or something outside the assumed scope).
  bool negative_flag = false;
  int baseline_resamples = 0;
};

// The algebraic index of the collection: the colength of its special
// scheme ideal in the local ring at the origin.
Colength alg_index(const VarietyGerm& x, const FormCollection& c, const EngineLimits& limits = {});

// Alias exposing the identification ind = alg_index, so both terms of
// the difference defining Ch can be inspected.
Colength index_of_collection(const VarietyGerm& x, const FormCollection& c,
                             const EngineLimits& limits = {});

// Draws a random constant-coefficient collection of the given shape with
// integer coefficients in [-height, height].
LinearCollection draw_linear_collection(const Partition& partition, int variable_count,
                                        int coefficient_height, std::uint64_t seed,
                                        std::uint64_t stream);

// Randomized baseline ind{l} for a generic constant-linear collection.
// Draws `trials` independent collections; when the observed colengths
// disagree, the maximum is discarded (non-generic draws only jump up)
// and a fresh draw is taken, up to max_resamples. Certifies the minimum
// value attained at least `trials` times, else raises GenericityError.
// An optional notice sink receives one line per resample.
BaselineResult generic_linear_baseline(const VarietyGerm& x, const Partition& partition,
                                       const TrialConfig& cfg,
                                       const std::function<void(const std::string&)>& notice = {});

// Ch = alg_index(X, C) - generic baseline. Raises NonIsolatedSchemeError
// when the omega side has infinite colength.
ObstructionReport chern_obstruction(const VarietyGerm& x, const FormCollection& c,
                                    const TrialConfig& cfg,
                                    const std::function<void(const std::string&)>& notice = {});

}  // namespace chernob
