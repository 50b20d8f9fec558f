#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crowdest/numeric.hpp"

namespace crowdest {

/// Exact evaluation of the delta = 1 condition
///   0 < 2(s1^2+s1)/(d0+1) - (d0+2)/2 - s2 <= -R_{d0}(s1)/P_{d0}(s1).
struct CondCertificate {
  Rat middle;     // 2(s1^2+s1)/(d0+1) - (d0+2)/2 - s2
  Rat neg_ratio;  // -R_{d0}(s1)/P_{d0}(s1)
  bool holds = false;
};

struct GEstimate {
  long s1 = 0;
  long s2 = 0;
  long bracket = 0;  // floor(2s1 + s2 + 3/2 - sqrt(4s1^2+4s1+(s2+1/2)^2))
  int delta = 0;
  long g = 0;  // bracket + delta
  long d0 = 0;
  bool d1_integer = false;  // radicand was a perfect square
  std::optional<CondCertificate> certificate;
};

/// floor(2s1 + s2 + 3/2 - sqrt(4s1^2+4s1+(s2+1/2)^2)), via exact integer
/// square root of the cleared radicand 16s1^2+16s1+(2s2+1)^2.
long bracket_value(long s1, long s2);

struct D0Result {
  long d0 = 0;
  bool d1_integer = false;
};

/// floor(sqrt(4s1^2+4s1+(s2+1/2)^2) - s2 - 3/2), flagging the perfect-square
/// case in which d1 itself is an integer.
D0Result d0_value(long s1, long s2);

/// The closed-form argmax with the exact delta resolution. Requires
/// s1, s2 >= 1; at s1 = 0 or s2 = 0 the closed form is not claimed and the
/// argmax scan is the defining route.
GEstimate g_exact(long s1, long s2);

/// Whether f_{x,s2}(2x-d) >= f_{x,s2}(2x-d-1), decided by the exact rational
/// step condition s2 >= 2(x^2+x)/(d+1) - (d+2)/2 + R_d(x)/P_d(x).
/// Requires 2x > d.
bool feq_condition(long x, unsigned d, long s2);

/// Smallest s2 with g(s1,s2) >= 2s1 - d, for 0 <= d <= 4 (ceiling of
/// 2(s1^2+s1)/(d+1) - (d+2)/2). Requires s1 > d/2.
long top_threshold(long s1, unsigned d);

/// ceil(sqrt(4s1^2+4s1+(s2+1/2)^2) - 3/2) - delta = 2s1 + s2 - g.
long union_mode_closed_form(long s1, long s2);

/// One constant-g row of the g-table.
struct GTableRow {
  long s2_lo = 0;
  long s2_hi = 0;
  long g = 0;
};

/// g over s2 in [s2_lo, s2_hi], compressed into constant runs. Values come
/// from the exact scan; at a tie the closed form's allowable value is
/// reported (the paper accepts either).
std::vector<GTableRow> g_table(long s1, long s2_lo, long s2_hi);

/// All s2 <= s2_max with delta = 1.
std::vector<long> delta_cases(long s1, long s2_max);

/// The real value 2s1 + s2 + 3/2 - sqrt(...) truncated to `decimals` digits.
std::string bracket_expression_decimal(long s1, long s2, unsigned decimals);

}  // namespace crowdest
