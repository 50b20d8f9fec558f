#pragma once

#include <string>
#include <vector>

#include "crowdest/poly.hpp"

namespace crowdest {

/// s1 = x, s3 = x + delta_gap; inputs with s3 < s1 are normalized through
/// the s1<->s3 symmetry of f before reaching this form.
struct GeneralScenario {
  long x = 0;
  long delta_gap = 0;
  long s2 = 0;
};

/// P_{Delta,d}(x) = sum_j ((x+Delta)_j)^2 (x_{d-j})^2 / (j! (d-j)!).
/// Delta = 0 reduces to P_d. Memoized per (Delta, d).
Polynomial p_delta_poly(unsigned delta_gap, unsigned d);

/// P_{Delta,d} evaluated pointwise from the defining sum.
Rat p_delta_value(unsigned delta_gap, unsigned d, const Rat& x);

/// Closed-form quotient of P_{Delta,d+1}/P_{Delta,d}:
/// (2x^2 - 2(d-Delta)x + d(d+1-2Delta)/2 + Delta^2) / (d+1).
Polynomial general_quotient(unsigned delta_gap, unsigned d);

struct GeneralDivision {
  long delta_gap = 0;
  long d = 0;
  Polynomial quotient;
  Polynomial remainder;  // R_{Delta,d}
};

/// Exact division of P_{Delta,d+1} by P_{Delta,d}; the quotient is certified
/// against the closed form.
GeneralDivision general_division(unsigned delta_gap, unsigned d);

/// The step condition: f_{x,s2,x+Delta}(2x+Delta-d) >= f(2x+Delta-d-1) iff
/// s2 >= (2x^2+2(Delta+1)x+Delta^2+Delta)/(d+1) - (d+2)/2 + R/P at x.
/// Requires 2x + Delta > d and P_{Delta,d}(x) != 0.
bool delta_condition(long x, unsigned delta_gap, unsigned d, long s2);

struct FormulaN {
  std::string n;             // s1+s2+s3+3/2 - sqrt(...), rounded decimals
  std::string union_size;    // sqrt(...) - 3/2
};

/// Eq-of-the-general-case estimate N = s1+s2+s3+3/2 -
/// sqrt(2s1^2+2s1+2s3^2+2s3+(s2+1/2)^2), to `decimals` rounded places.
/// Exact values print exactly.
FormulaN formula_n(long s1, long s2, long s3, unsigned decimals);

struct D8Row {
  long s1, s3, s2;
  long actual_n;          // exact argmax scan
  std::string formula_n;  // 8-decimal estimate
};

/// Actual-vs-formula comparison rows over an s2 range (the paper's
/// delta = 8 table layout).
std::vector<D8Row> d8_table(long s1, long s3, long s2_lo, long s2_hi);

}  // namespace crowdest
