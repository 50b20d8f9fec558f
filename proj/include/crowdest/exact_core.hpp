#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crowdest/numeric.hpp"

namespace crowdest {

/// Set sizes (|A|, |B|, |C|) of one estimation problem. A and C are disjoint;
/// B may meet both. Practical limit ~1e6 per coordinate.
struct Scenario {
  long s1 = 0;
  long s2 = 0;
  long s3 = 0;

  Scenario() = default;
  Scenario(long a, long b, long c);

  /// Largest N with nonzero weight: min(s2, s1 + s3).
  long n_max() const;
  bool operator==(const Scenario&) const = default;
};

/// |E_{i,j}| = C(s1,i) C(s2,i) C(s2-i,j) C(s3,j): the number of sample-space
/// tuples with |A∩B| = i and |B∩C| = j. Out-of-range i, j give 0.
BigInt event_count(const Scenario& sc, long i, long j);

/// |E_N| = C(s2,N) * sum_i C(s1,i) C(s3,N-i) C(N,i); zero exactly outside
/// [0, n_max].
BigInt f_value(const Scenario& sc, long N);

/// Exact weights of the total-overlap count N over [0, n_max].
struct DistributionTable {
  Scenario scenario;
  std::vector<BigInt> weights;  // index N

  const BigInt& weight(long N) const;
  BigInt total() const;

  void write_csv(std::ostream& out, char sep = ',') const;
  std::string to_json() const;
};

DistributionTable distribution(const Scenario& sc);

/// Total sample-space size by direct double summation over (i, j).
BigInt sample_space_size(const Scenario& sc);

struct ArgmaxReport {
  long n_star = 0;       // smallest maximizing N
  bool tied = false;     // weight(n_star) == weight(n_star + 1)
  bool unimodal = true;  // weakly increasing then weakly decreasing
  long union_mode = 0;   // s1 + s2 + s3 - n_star
};

ArgmaxReport argmax_scan(const Scenario& sc);
ArgmaxReport argmax_of(const DistributionTable& table);

}  // namespace crowdest
