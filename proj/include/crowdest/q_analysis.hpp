#pragma once

#include <string>
#include <vector>

#include "crowdest/poly.hpp"

namespace crowdest {

/// Q_d(x) = 1 - (R~_d/P~_d) / (-(d-2)/(2x+d-2)), held as the exact rational
/// function ((d-2)P~_d + R~_d(2x+d-2)) / ((d-2)P~_d). Both parts have degree
/// 2*floor(d/2).
struct QFunction {
  long d = 0;
  Polynomial numerator;
  Polynomial denominator;
};

QFunction q_function(unsigned d);  // requires d >= 3

/// Q_d at x; PoleError at roots of the denominator (none exist on the reals,
/// but the contract is explicit).
Rat q_eval(const QFunction& qf, const Rat& x);

/// lim_{x->inf} Q_d = -2/((d+1)(d-2)); certified against the leading
/// coefficient ratio.
Rat q_limit(unsigned d);

/// One certified critical point: bracket for x plus an enclosure of Q there.
struct CriticalPoint {
  Rat x_lo, x_hi;
  bool exact = false;
  std::string x_str;  // truncated significant digits, certified
  std::string q_str;
  RatInterval q{Rat(0), Rat(0)};
};

struct CriticalPointReport {
  long d = 0;
  long certified_count = 0;  // Sturm count of Q_d' roots in (0, inf)
  std::string x_max, q_at_x_max;
  std::string x_min, q_at_x_min;
  Rat q_lim;
  unsigned digits = 0;
  std::vector<CriticalPoint> points;  // ascending x
};

/// Isolates every root of Q_d' in (0, inf) by Sturm sequences, refines each
/// to `digits` correct significant digits by exact bisection, and encloses
/// the Q values. x_max/x_min are the absolute extrema over the critical
/// points. Requires d >= 5 and digits <= 200.
CriticalPointReport critical_points(unsigned d, unsigned digits);

struct Conj2Evidence {
  long d = 0;
  std::string value;        // Q_d((d+sqrt(d+2))/2), fixed decimals
  bool below_threshold = false;  // Q <= 0.005, decided exactly
  bool exact_x = false;     // d+2 was a perfect square
};

/// Evaluates Q_d at the conjectured boundary x = (d+sqrt(d+2))/2 with a
/// sqrt approximation carrying digits+10 guard places.
Conj2Evidence conj2_evidence(unsigned d, unsigned digits);

struct CoefficientFit {
  unsigned k = 0;
  std::vector<long> d_samples;
  std::vector<Rat> c_exact;
  std::vector<std::string> c;          // decimal strings at the fit precision
  std::vector<std::string> residuals;  // exact residuals of the solved system
};

/// Solves x_min(d) = 5d/2 - 2 + sum_i c_i/(d-1)^i over the sample d's, using
/// x_min values rounded at `digits` decimal places and exact Gaussian
/// elimination. d_list needs exactly k+1 distinct odd entries >= 5 and
/// digits >= 40.
CoefficientFit fit_coefficients(const std::vector<long>& d_list, unsigned k, unsigned digits);

struct AsymptotePrediction {
  Rat x_max;  // d/6 - 1/8 - 1/(64(d-1))
  Rat x_min;  // 5d/2 - 2 + 1/96 - (305/1728)/(d-1)
  Rat q_min;  // -1/(12(d-1))
};

AsymptotePrediction asymptote_predictions(unsigned d);  // odd d >= 5

}  // namespace crowdest
