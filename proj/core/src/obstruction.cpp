#include "chernob/obstruction.hpp"

#include <algorithm>
#include <sstream>

#include "chernob/detrand.hpp"
#include "chernob/errors.hpp"

namespace chernob {

Colength alg_index(const VarietyGerm& x, const FormCollection& c, const EngineLimits& limits) {
  const Ideal ideal = special_scheme_ideal(x, c);
  return colength(standard_basis(ideal, MonomialOrder::LocalNegDegRevLex, limits));
}

Colength index_of_collection(const VarietyGerm& x, const FormCollection& c,
                             const EngineLimits& limits) {
  return alg_index(x, c, limits);
}

LinearCollection draw_linear_collection(const Partition& partition, int variable_count,
                                        int coefficient_height, std::uint64_t seed,
                                        std::uint64_t stream) {
  DetRand rng(seed, stream);
  std::vector<std::vector<OneForm>> blocks;
  blocks.reserve(static_cast<std::size_t>(partition.size()));
  for (int i = 0; i < partition.size(); ++i) {
    std::vector<OneForm> block;
    block.reserve(static_cast<std::size_t>(partition.block_size(i)));
    for (int j = 0; j < partition.block_size(i); ++j) {
      std::vector<Polynomial> coeffs;
      coeffs.reserve(static_cast<std::size_t>(variable_count));
      for (int v = 0; v < variable_count; ++v) {
        const std::int64_t c = rng.uniform_int(-coefficient_height, coefficient_height);
        coeffs.push_back(Polynomial::constant(variable_count, Rational(c)));
      }
      block.push_back(OneForm(std::move(coeffs)));
    }
    blocks.push_back(std::move(block));
  }
  return LinearCollection(partition, std::move(blocks));
}

BaselineResult generic_linear_baseline(const VarietyGerm& x, const Partition& partition,
                                       const TrialConfig& cfg,
                                       const std::function<void(const std::string&)>& notice) {
  if (cfg.trials < 2) {
    throw ValidationError("a certified baseline needs at least 2 trials");
  }
  BaselineResult result;
  std::uint64_t next_stream = 0;

  auto draw_value = [&]() {
    const LinearCollection l = draw_linear_collection(partition, x.variable_count(),
                                                      cfg.coefficient_height, cfg.seed,
                                                      next_stream++);
    const Colength value = alg_index(x, l.forms(), cfg.limits);
    result.observed.push_back(value);
    return value;
  };

  std::vector<Colength> active;
  for (int t = 0; t < cfg.trials; ++t) active.push_back(draw_value());

  for (;;) {
    const bool agree =
        std::all_of(active.begin(), active.end(), [&](const Colength& v) { return v == active.front(); });
    if (agree) {
      result.value = active.front();
      result.certified_trials = active;
      return result;
    }
    if (result.resamples >= cfg.max_resamples) {
      std::vector<std::string> seen;
      for (const Colength& v : result.observed) seen.push_back(v.str());
      std::ostringstream msg;
      msg << "genericity not certified after " << cfg.max_resamples
          << " resamples; observed colengths:";
      for (const std::string& s : seen) msg << " " << s;
      throw GenericityError(msg.str(), std::move(seen));
    }
    // Non-generic draws lie in a proper closed subset where the
    // colength jumps up, so the outlier to discard is the maximum.
    auto worst = std::max_element(active.begin(), active.end(),
                                  [](const Colength& a, const Colength& b) { return a < b; });
    if (notice) {
      notice("baseline trial disagreement; discarding colength " + worst->str() +
             " and resampling");
    }
    active.erase(worst);
    ++result.resamples;
    active.push_back(draw_value());
  }
}

ObstructionReport chern_obstruction(const VarietyGerm& x, const FormCollection& c,
                                    const TrialConfig& cfg,
                                    const std::function<void(const std::string&)>& notice) {
  ObstructionReport report;
  report.seed = cfg.seed;
  report.alg_index = alg_index(x, c, cfg.limits);
  if (!report.alg_index.is_finite()) throw NonIsolatedSchemeError();

  const BaselineResult baseline = generic_linear_baseline(x, c.partition(), cfg, notice);
  if (!baseline.value.is_finite()) throw NonIsolatedSchemeError();

  report.baseline = baseline.value;
  report.trial_values = baseline.certified_trials;
  report.baseline_resamples = baseline.resamples;
  report.chern = static_cast<long long>(report.alg_index.value()) -
                 static_cast<long long>(baseline.value.value());
  report.negative_flag = report.chern < 0;
  if (report.negative_flag && notice) {
    notice("negative Chern obstruction: alg_index " + report.alg_index.str() + " < baseline " +
           baseline.value.str() + "; input may be outside the assumed scope");
  }
  return report;
}

}  // namespace chernob
