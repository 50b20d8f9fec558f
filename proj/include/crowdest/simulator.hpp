#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "crowdest/exact_core.hpp"

namespace crowdest {

struct SampleConfig {
  Scenario scenario;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

struct EmpiricalDistribution {
  Scenario scenario;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::map<long, std::uint64_t> counts;  // N -> occurrences
  long mode = 0;                         // smallest empirical argmax
  long exact_mode = 0;                   // n_star of the exact distribution
  Rat tv_distance;                       // exact total variation distance

  std::string to_json() const;
};

/// Draws `trials` overlap pairs (i, j) with probability proportional to the
/// exact |E_{i,j}| weights and aggregates N = i + j. Sampling pairs instead
/// of raw 4-tuples is an exact reduction: every tuple in a class is
/// equiprobable and N depends only on the class.
///
/// Random source: std::mt19937_64 seeded directly with `seed` (the engine is
/// fully specified by the C++ standard, so output is platform-independent).
/// Uniform big integers below the total weight are assembled from 64-bit
/// draws, least-significant word first, with the top word masked to the bit
/// length of total-1 and the whole value rejected when >= total.
EmpiricalDistribution sample_distribution(const SampleConfig& config);

}  // namespace crowdest
