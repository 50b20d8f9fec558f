#include "crowdest/poly_lab.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "crowdest/errors.hpp"

namespace crowdest {

namespace {

std::mutex g_cache_mutex;

// Squared falling factorials (x_i)^2 have integer coefficients and are shared
// across every P_d; grown on demand.
const IntPoly& falling_sq(unsigned i) {
  static std::vector<IntPoly> cache{{BigInt(1)}};  // (x_0)^2 = 1
  static IntPoly fall{BigInt(1)};                  // x_i incrementally
  while (cache.size() <= i) {
    long k = static_cast<long>(cache.size()) - 1;
    fall = intpoly::mul(fall, IntPoly{BigInt(-k), BigInt(1)});
    cache.push_back(intpoly::mul(fall, fall));
  }
  return cache[i];
}

Polynomial build_p_poly(unsigned d) {
  std::vector<Rat> acc(2 * d + 1, Rat(0));
  for (unsigned i = 0; i <= d / 2; ++i) {
    IntPoly term = intpoly::mul(falling_sq(i), falling_sq(d - i));
    Rat w = make_rat(BigInt(i == d - i ? 1 : 2), factorial(i) * factorial(d - i));
    for (size_t k = 0; k < term.size(); ++k) acc[k] += Rat(term[k]) * w;
  }
  return Polynomial(std::move(acc));
}

}  // namespace

Polynomial p_poly(unsigned d) {
  static std::map<unsigned, Polynomial> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, build_p_poly(d)).first;
  return it->second;
}

Rat p_value(unsigned d, const Rat& x) {
  std::vector<Rat> fall(d + 1);
  fall[0] = 1;
  for (unsigned i = 1; i <= d; ++i) fall[i] = fall[i - 1] * (x - static_cast<long>(i - 1));
  Rat acc(0);
  for (unsigned i = 0; i <= d; ++i) {
    Rat t = fall[i] * fall[i] * fall[d - i] * fall[d - i];
    acc += t / Rat(factorial(i) * factorial(d - i));
  }
  return acc;
}

Polynomial lemma_quotient(unsigned d) {
  return Polynomial({make_rat(d, 2), make_rat(-2L * d, d + 1), make_rat(2, d + 1)});
}

DivisionResult q_and_r(unsigned d) {
  DivisionResult div = poly_divide(p_poly(d + 1), p_poly(d));
  if (!(div.quotient == lemma_quotient(d)))
    throw InternalError("P_{d+1}/P_d quotient differs from the closed form at d=" +
                        std::to_string(d));
  if (div.remainder.degree() >= 2 * static_cast<long>(d))
    throw InternalError("remainder degree bound violated at d=" + std::to_string(d));
  return div;
}

std::pair<Polynomial, Polynomial> reduced_pair(unsigned d) {
  DivisionResult div = q_and_r(d);
  if (d < 2) return {p_poly(d), div.remainder};
  unsigned b = d / 2, eps = d % 2;
  Polynomial factor = Polynomial::constant(Rat(1));
  for (unsigned i = 0; i + 1 <= b + eps; ++i) {
    Polynomial lin({Rat(-static_cast<long>(i)), Rat(1)});
    factor = factor * lin * lin;
  }
  DivisionResult pd = poly_divide(p_poly(d), factor);
  if (!pd.remainder.is_zero())
    throw InternalError("common factor does not divide P_d at d=" + std::to_string(d));
  DivisionResult rd = poly_divide(div.remainder, factor);
  if (!rd.remainder.is_zero())
    throw InternalError("common factor does not divide R_d at d=" + std::to_string(d));
  return {pd.quotient, rd.quotient};
}

Rat ratio_at(unsigned d, const Rat& x) {
  Rat pd = p_value(d, x);
  if (sign(pd) == 0) throw PoleError("P_d vanishes at the evaluation point");
  Rat rd = p_value(d + 1, x) - lemma_quotient(d).eval(x) * pd;
  return rd / pd;
}

bool leading_terms_check(unsigned d) {
  if (d < 2) throw DomainError("leading_terms_check requires d >= 2");
  Polynomial p = p_poly(d);
  BigInt p2 = 1;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, d);  // 2^d
  Rat lead = make_rat(p2, factorial(d));
  Rat second = -make_rat(p2, 2) / Rat(factorial(d - 2));
  Rat third = make_rat(p2 * (3L * d * d - 5L * d + 4), 8) / Rat(3 * factorial(d - 2));
  return p.coeff(2 * d) == lead && p.coeff(2 * d - 1) == second && p.coeff(2 * d - 2) == third;
}

bool identity_checks(unsigned long b) {
  if (b < 1) throw DomainError("identity_checks requires b >= 1");
  long lb = static_cast<long>(b);
  BigInt odd = 0, even = 0;
  for (long i = 0; i < lb; ++i) {
    BigInt bi = lb - i;
    odd += binom(2 * lb + 1, i) * (2 * bi * bi + lb - 2 * i);
    even += binom(2 * lb, i) * (2 * bi * bi - lb);
  }
  odd -= lb * binom(2 * lb + 1, lb);
  even -= lb * binom(2 * lb - 1, lb - 1);
  return odd == 0 && even == 0;
}

}  // namespace crowdest
