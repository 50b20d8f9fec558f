#pragma once

#include <vector>

#include "crowdest/poly.hpp"

namespace crowdest {
namespace sturm {

/// Canonical Sturm chain of an integer polynomial: p0 = w, p1 = w', each
/// later element the negated pseudo-remainder reduced to its primitive part
/// (positive scalars preserve the sign structure the count theorem needs).
class Chain {
public:
  explicit Chain(IntPoly w);

  const IntPoly& poly() const { return seq_.front(); }

  /// Sign variations of the chain at x (zeros skipped).
  int variations_at(const Rat& x) const;
  /// Variations in the limit x -> +infinity: signs of leading coefficients.
  int variations_at_pos_inf() const;

  /// Number of distinct real roots of w in the half-open interval (a, b],
  /// for a < b with w(a) != 0 and w(b) != 0.
  long count_in(const Rat& a, const Rat& b) const;
  /// Number of distinct real roots of w in (0, +infinity). Requires w(0) != 0.
  long count_positive() const;

  /// A bound B > every positive root (Cauchy bound, rounded up).
  Rat positive_root_bound() const;

private:
  std::vector<IntPoly> seq_;
};

/// An isolating interval for one real root of a fixed polynomial: either an
/// exact rational root (lo == hi) or an open-closed bracket (lo, hi] with
/// exactly one root inside.
struct RootBracket {
  Rat lo;
  Rat hi;
  bool exact = false;
};

/// Isolating brackets for every root of w in (0, +infinity), ascending.
/// Exact rational roots (possible only when a bisection point happens to hit
/// one) are deflated out and reported with lo == hi.
std::vector<RootBracket> isolate_positive_roots(const IntPoly& w);

/// Shrinks the bracket by one bisection step. Sign-change bisection when the
/// endpoint signs differ; Sturm-count bisection otherwise (even-multiplicity
/// roots have no sign change). No-op on exact brackets.
void refine_step(const IntPoly& w, const Chain& chain, RootBracket& b);

}  // namespace sturm
}  // namespace crowdest
