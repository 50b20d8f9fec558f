#pragma once

#include <utility>

#include "crowdest/poly.hpp"

namespace crowdest {

/// P_d(x) = sum_{i=0}^{d} (x_i)^2 (x_{d-i})^2 / (i! (d-i)!), degree 2d.
/// Memoized per process; safe under concurrent use.
Polynomial p_poly(unsigned d);

/// P_d evaluated at a point directly from the defining sum, without the
/// coefficient form. Useful as an independent route and for large d.
Rat p_value(unsigned d, const Rat& x);

/// The closed-form quotient of P_{d+1} / P_d: 2/(d+1) x^2 - 2d/(d+1) x + d/2.
Polynomial lemma_quotient(unsigned d);

/// Exact division of P_{d+1} by P_d. quotient matches lemma_quotient(d) and
/// deg(remainder) < 2d; both are certified here.
DivisionResult q_and_r(unsigned d);

/// (P~_d, R~_d): P_d and R_d after exact removal of the shared factor
/// prod_{i=0}^{b-1+eps} (x-i)^2, where d = 2b+eps. For d < 2 the factor is
/// empty and (P_d, R_d) is returned unchanged. A nonzero remainder in either
/// division is an InternalError.
std::pair<Polynomial, Polynomial> reduced_pair(unsigned d);

/// R_d(x)/P_d(x), evaluated pointwise as
/// (P_{d+1}(x) - q_d(x) P_d(x)) / P_d(x). Throws PoleError when P_d(x) = 0.
Rat ratio_at(unsigned d, const Rat& x);

/// Coefficients of x^{2d}, x^{2d-1}, x^{2d-2} in P_d equal 2^d/d!,
/// -2^{d-1}/(d-2)!, 2^{d-3}(3d^2-5d+4)/(3(d-2)!). Requires d >= 2.
bool leading_terms_check(unsigned d);

/// The two cancellation identities behind the remainder sign argument:
///   sum_{i<b} C(2b+1,i)(2(b-i)^2+b-2i) = b C(2b+1,b)
///   sum_{i<b} C(2b,i)  (2(b-i)^2-b)    = b C(2b-1,b-1)
bool identity_checks(unsigned long b);

}  // namespace crowdest
