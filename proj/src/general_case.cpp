#include "crowdest/general_case.hpp"

#include <map>
#include <mutex>

#include "crowdest/errors.hpp"
#include "crowdest/exact_core.hpp"

namespace crowdest {

namespace {

std::mutex g_cache_mutex;

Polynomial build_p_delta(unsigned delta_gap, unsigned d) {
  // ((x+Delta)_j)^2 and (x_{d-j})^2 as integer polynomials.
  std::vector<IntPoly> shifted(d + 1), plain(d + 1);
  IntPoly fs{BigInt(1)}, fp{BigInt(1)};
  shifted[0] = fs;
  plain[0] = fp;
  for (unsigned j = 1; j <= d; ++j) {
    long ds = static_cast<long>(delta_gap) - static_cast<long>(j) + 1;
    fs = intpoly::mul(fs, IntPoly{BigInt(ds), BigInt(1)});          // x + Delta - (j-1)
    fp = intpoly::mul(fp, IntPoly{BigInt(1 - static_cast<long>(j)), BigInt(1)});
    shifted[j] = fs;
    plain[j] = fp;
  }
  std::vector<Rat> acc(2 * d + 1, Rat(0));
  for (unsigned j = 0; j <= d; ++j) {
    IntPoly term = intpoly::mul(intpoly::mul(shifted[j], shifted[j]),
                                intpoly::mul(plain[d - j], plain[d - j]));
    Rat w = make_rat(BigInt(1), factorial(j) * factorial(d - j));
    for (size_t k = 0; k < term.size(); ++k) acc[k] += Rat(term[k]) * w;
  }
  return Polynomial(std::move(acc));
}

}  // namespace

Polynomial p_delta_poly(unsigned delta_gap, unsigned d) {
  static std::map<std::pair<unsigned, unsigned>, Polynomial> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto key = std::make_pair(delta_gap, d);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_p_delta(delta_gap, d)).first;
  return it->second;
}

Rat p_delta_value(unsigned delta_gap, unsigned d, const Rat& x) {
  Rat xs = x + static_cast<long>(delta_gap);
  std::vector<Rat> fs(d + 1), fp(d + 1);
  fs[0] = fp[0] = 1;
  for (unsigned j = 1; j <= d; ++j) {
    fs[j] = fs[j - 1] * (xs - static_cast<long>(j - 1));
    fp[j] = fp[j - 1] * (x - static_cast<long>(j - 1));
  }
  Rat acc(0);
  for (unsigned j = 0; j <= d; ++j)
    acc += fs[j] * fs[j] * fp[d - j] * fp[d - j] / Rat(factorial(j) * factorial(d - j));
  return acc;
}

Polynomial general_quotient(unsigned delta_gap, unsigned d) {
  long dd = static_cast<long>(d), dl = static_cast<long>(delta_gap);
  Rat inv = make_rat(1, dd + 1);
  Rat c0 = (make_rat(dd * (dd + 1 - 2 * dl), 2) + Rat(dl) * Rat(dl)) * inv;
  Rat c1 = Rat(-2 * (dd - dl)) * inv;
  Rat c2 = Rat(2) * inv;
  return Polynomial({c0, c1, c2});
}

GeneralDivision general_division(unsigned delta_gap, unsigned d) {
  GeneralDivision g;
  g.delta_gap = static_cast<long>(delta_gap);
  g.d = static_cast<long>(d);
  DivisionResult div = poly_divide(p_delta_poly(delta_gap, d + 1), p_delta_poly(delta_gap, d));
  if (!(div.quotient == general_quotient(delta_gap, d)))
    throw InternalError("general quotient differs from the closed form");
  g.quotient = std::move(div.quotient);
  g.remainder = std::move(div.remainder);
  return g;
}

bool delta_condition(long x, unsigned delta_gap, unsigned d, long s2) {
  long dl = static_cast<long>(delta_gap);
  if (2 * x + dl <= static_cast<long>(d))
    throw DomainError("delta_condition requires 2x + Delta > d");
  Rat px = p_delta_value(delta_gap, d, Rat(x));
  if (sign(px) == 0) throw PoleError("P_{Delta,d} vanishes at x");
  Rat rx = p_delta_value(delta_gap, d + 1, Rat(x)) - general_quotient(delta_gap, d).eval(Rat(x)) * px;
  Rat rhs = make_rat(2 * BigInt(x) * BigInt(x) + 2 * (dl + 1) * BigInt(x) + BigInt(dl) * dl + dl,
                     static_cast<long>(d) + 1) -
            make_rat(static_cast<long>(d) + 2, 2) + rx / px;
  return Rat(s2) >= rhs;
}

FormulaN formula_n(long s1, long s2, long s3, unsigned decimals) {
  if (s1 < 1 || s2 < 1 || s3 < 1) throw DomainError("formula_n requires inputs >= 1");
  BigInt a(s1), c(s3), b(2 * s2 + 1);
  BigInt U = 8 * a * a + 8 * a + 8 * c * c + 8 * c + b * b;
  Rat m(2 * (s1 + s2 + s3) + 3);
  // Guard digits keep the rounding of both interval ends identical.
  for (unsigned guard = decimals + 6;; guard += 10) {
    RatInterval s = sqrt_enclosure(U, guard);
    RatInterval n{(m - s.hi) / 2, (m - s.lo) / 2};
    RatInterval u{s.lo / 2 - make_rat(3, 2), s.hi / 2 - make_rat(3, 2)};
    std::string nlo = dec_fixed_round(n.lo, decimals), nhi = dec_fixed_round(n.hi, decimals);
    std::string ulo = dec_fixed_round(u.lo, decimals), uhi = dec_fixed_round(u.hi, decimals);
    if (nlo == nhi && ulo == uhi) return {nlo, ulo};
    if (guard > decimals + 200) throw InternalError("formula_n rounding failed to stabilize");
  }
}

std::vector<D8Row> d8_table(long s1, long s3, long s2_lo, long s2_hi) {
  if (s2_lo > s2_hi) throw DomainError("empty s2 range");
  std::vector<D8Row> rows;
  for (long s2 = s2_lo; s2 <= s2_hi; ++s2) {
    ArgmaxReport rep = argmax_scan(Scenario(s1, s2, s3));
    rows.push_back({s1, s3, s2, rep.n_star, formula_n(s1, s2, s3, 8).n});
  }
  return rows;
}

}  // namespace crowdest
