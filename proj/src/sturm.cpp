#include "crowdest/sturm.hpp"

#include <algorithm>

#include "crowdest/errors.hpp"

namespace crowdest {
namespace sturm {

namespace {

// Pseudo-remainder of a by b (deg a >= deg b >= 1): the remainder of
// lc(b)^m * a divided by b for the number m of elimination steps actually
// performed, computed purely over the integers. multiplier_sign reports the
// sign of lc(b)^m so the caller can keep the chain positively scaled.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b, int& multiplier_sign) {
  long db = static_cast<long>(b.size()) - 1;
  const BigInt& lb = b.back();
  long mults = 0;
  while (static_cast<long>(a.size()) - 1 >= db) {
    long k = static_cast<long>(a.size()) - 1;
    BigInt top = a.back();
    for (auto& c : a) c *= lb;
    ++mults;
    for (long i = 0; i <= db; ++i)
      a[static_cast<size_t>(k - db + i)] -= top * b[static_cast<size_t>(i)];
    a.resize(static_cast<size_t>(k));  // leading term cancels exactly
    intpoly::normalize(a);
  }
  multiplier_sign = (sgn(lb) < 0 && (mults % 2 != 0)) ? -1 : 1;
  return a;
}

int sign_at_pos_inf(const IntPoly& p) { return p.empty() ? 0 : sgn(p.back()); }

int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Exact rational root r of w: divides out (x - r) as many times as it divides,
// returning the deflated polynomial (primitive).
IntPoly deflate_root(const IntPoly& w, const Rat& r) {
  Polynomial p;
  {
    std::vector<Rat> cs(w.size());
    for (size_t i = 0; i < w.size(); ++i) cs[i] = Rat(w[i]);
    p = Polynomial(std::move(cs));
  }
  Polynomial lin({-r, Rat(1)});
  while (true) {
    DivisionResult d = poly_divide(p, lin);
    if (!d.remainder.is_zero()) break;
    p = d.quotient;
    if (p.degree() < 1) break;
  }
  return intpoly::from_polynomial(p);
}

}  // namespace

Chain::Chain(IntPoly w) {
  intpoly::normalize(w);
  if (w.empty()) throw DomainError("Sturm chain of the zero polynomial");
  seq_.push_back(intpoly::primitive_part(std::move(w)));
  if (seq_.front().size() == 1) return;
  seq_.push_back(intpoly::primitive_part(intpoly::derivative(seq_.front())));
  while (seq_.back().size() > 1) {
    int msign = 1;
    IntPoly rem = pseudo_remainder(seq_[seq_.size() - 2], seq_.back(), msign);
    if (rem.empty()) break;
    // p_{k+1} = -(p_{k-1} mod p_k) up to a positive scalar.
    rem = intpoly::primitive_part(std::move(rem));
    if (msign > 0)
      for (auto& c : rem) c = -c;
    seq_.push_back(std::move(rem));
  }
}

int Chain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(intpoly::sign_at(p, x));
  return count_variations(signs);
}

int Chain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(sign_at_pos_inf(p));
  return count_variations(signs);
}

long Chain::count_in(const Rat& a, const Rat& b) const {
  return variations_at(a) - variations_at(b);
}

long Chain::count_positive() const {
  if (intpoly::sign_at(poly(), Rat(0)) == 0)
    throw DomainError("count_positive requires w(0) != 0");
  return variations_at(Rat(0)) - variations_at_pos_inf();
}

Rat Chain::positive_root_bound() const {
  const IntPoly& w = poly();
  BigInt maxc = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i) maxc = std::max(maxc, BigInt(abs(w[i])));
  BigInt lead = abs(w.back());
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
  return Rat(q + 1);
}

namespace {

void isolate_rec(const Chain& chain, const Rat& a, const Rat& b, int va, int vb,
                 std::vector<RootBracket>& out, std::vector<Rat>& exact_hits) {
  long c = va - vb;
  if (c <= 0) return;
  if (c == 1) {
    out.push_back({a, b, false});
    return;
  }
  Rat m = (a + b) / 2;
  if (intpoly::sign_at(chain.poly(), m) == 0) {
    exact_hits.push_back(m);
    return;  // caller restarts on the deflated polynomial
  }
  int vm = chain.variations_at(m);
  isolate_rec(chain, a, m, va, vm, out, exact_hits);
  isolate_rec(chain, m, b, vm, vb, out, exact_hits);
}

}  // namespace

std::vector<RootBracket> isolate_positive_roots(const IntPoly& w_in) {
  IntPoly w = intpoly::primitive_part(w_in);
  intpoly::normalize(w);
  if (w.empty()) throw DomainError("cannot isolate roots of the zero polynomial");
  // Roots at 0 are outside (0, inf); strip x^k.
  size_t k = 0;
  while (k < w.size() && w[k] == 0) ++k;
  w.erase(w.begin(), w.begin() + static_cast<long>(k));
  std::vector<RootBracket> exact_roots;
  while (true) {
    if (w.size() <= 1) break;
    Chain chain(w);
    long total = chain.count_positive();
    if (total == 0) break;
    Rat bound = chain.positive_root_bound();
    int v0 = chain.variations_at(Rat(0));
    int vb = chain.variations_at(bound);
    if (v0 - vb != total)
      throw InternalError("positive root bound missed a root");
    std::vector<RootBracket> found;
    std::vector<Rat> hits;
    isolate_rec(chain, Rat(0), bound, v0, vb, found, hits);
    if (hits.empty()) {
      std::sort(found.begin(), found.end(),
                [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
      for (const auto& r : exact_roots) found.push_back(r);
      std::sort(found.begin(), found.end(),
                [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
      return found;
    }
    // A bisection point landed on a rational root: record and deflate.
    for (const auto& m : hits) exact_roots.push_back({m, m, true});
    IntPoly next = w;
    for (const auto& m : hits) next = deflate_root(next, m);
    w = std::move(next);
  }
  return exact_roots;
}

void refine_step(const IntPoly& w, const Chain& chain, RootBracket& b) {
  if (b.exact) return;
  Rat m = (b.lo + b.hi) / 2;
  int sm = intpoly::sign_at(w, m);
  if (sm == 0) {
    b.lo = b.hi = m;
    b.exact = true;
    return;
  }
  int slo = intpoly::sign_at(w, b.lo);
  int shi = intpoly::sign_at(w, b.hi);
  if (slo != 0 && shi != 0 && slo != shi) {
    if (sm == slo)
      b.lo = m;
    else
      b.hi = m;
    return;
  }
  // No sign change across the bracket (even multiplicity): use Sturm counts.
  if (chain.count_in(b.lo, m) == 1)
    b.hi = m;
  else
    b.lo = m;
}

}  // namespace sturm
}  // namespace crowdest
