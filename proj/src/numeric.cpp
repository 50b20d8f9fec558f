#include "crowdest/numeric.hpp"

#include <algorithm>
#include <cstdlib>

#include "crowdest/errors.hpp"

namespace crowdest {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

BigInt pow10(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw DomainError("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& v) {
  return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binom(const BigInt& n, const BigInt& k) {
  if (n < 0) throw DomainError("binom requires n >= 0");
  if (k < 0 || k > n) return 0;
  BigInt kk = std::min(BigInt(k), BigInt(n - k));
  BigInt r = 1;
  // r stays integral: after multiplying by (n-kk+i) the prefix product
  // C(n-kk+i, i)*i! is divisible by i.
  for (BigInt i = 1; i <= kk; ++i) {
    r *= n - kk + i;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), i.get_mpz_t());
  }
  return r;
}

BigInt binom(long n, long k) { return binom(BigInt(n), BigInt(k)); }

Rat falling(const Rat& x, unsigned long i) {
  Rat r(1);
  for (unsigned long j = 0; j < i; ++j) r *= x - static_cast<long>(j);
  return r;
}

int sign(const Rat& v) { return sgn(v); }

bool RatInterval::contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }

RatInterval interval_add(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval interval_mul(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

RatInterval sqrt_enclosure(const BigInt& v, unsigned frac_digits) {
  BigInt scale = pow10(frac_digits);
  BigInt s = isqrt(v * scale * scale);
  Rat lo = make_rat(s, scale);
  if (s * s == v * scale * scale) return {lo, lo};
  return {lo, make_rat(s + 1, scale)};
}

namespace {

std::string zero_fixed(unsigned decimals) {
  std::string s = "0";
  if (decimals > 0) s += "." + std::string(decimals, '0');
  return s;
}

std::string render_fixed(bool negative, const BigInt& scaled, unsigned decimals) {
  if (scaled == 0) return zero_fixed(decimals);
  BigInt k = pow10(decimals);
  BigInt ip = scaled / k, fp = scaled % k;
  std::string frac = fp.get_str();
  frac.insert(0, decimals - frac.size(), '0');
  std::string s = (negative ? "-" : "") + ip.get_str();
  if (decimals > 0) s += "." + frac;
  return s;
}

// Smallest E with |v| < 10^E (v != 0).
long exp10_of(const Rat& v) {
  BigInt n = abs(v.get_num()), d = v.get_den();
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10)) - 1;
  auto less_than_pow = [&](long E) {
    if (E >= 0) return n < d * pow10(static_cast<unsigned long>(E));
    return n * pow10(static_cast<unsigned long>(-E)) < d;
  };
  while (!less_than_pow(e)) ++e;
  while (less_than_pow(e - 1)) --e;
  return e;
}

// floor(|v| * 10^k) for possibly negative k.
BigInt floor_scaled(const Rat& v, long k) {
  BigInt n = abs(v.get_num()), d = v.get_den();
  if (k >= 0) n *= pow10(static_cast<unsigned long>(k));
  else d *= pow10(static_cast<unsigned long>(-k));
  return n / d;
}

std::string render_sig(bool negative, const std::string& digs, long e) {
  long sig = static_cast<long>(digs.size());
  std::string s = negative ? "-" : "";
  if (e <= 0) {
    s += "0." + std::string(static_cast<size_t>(-e), '0') + digs;
  } else if (e >= sig) {
    s += digs + std::string(static_cast<size_t>(e - sig), '0');
  } else {
    s += digs.substr(0, static_cast<size_t>(e)) + "." + digs.substr(static_cast<size_t>(e));
  }
  return s;
}

}  // namespace

std::string dec_fixed_trunc(const Rat& v, unsigned decimals) {
  BigInt scaled = floor_scaled(v, static_cast<long>(decimals));
  return render_fixed(sign(v) < 0, scaled, decimals);
}

std::string dec_fixed_round(const Rat& v, unsigned decimals) {
  BigInt n = abs(v.get_num()), d = v.get_den();
  n *= pow10(decimals);
  BigInt scaled = (2 * n + d) / (2 * d);  // half away from zero
  return render_fixed(sign(v) < 0, scaled, decimals);
}

std::string dec_sig_trunc(const Rat& v, unsigned sig) {
  if (sig == 0) throw DomainError("dec_sig_trunc requires sig >= 1");
  if (sign(v) == 0) return "0";
  long e = exp10_of(v);
  BigInt m = floor_scaled(v, static_cast<long>(sig) - e);
  std::string digs = m.get_str();
  // Guard: m has exactly `sig` digits by construction of e.
  if (digs.size() != sig) throw InternalError("dec_sig_trunc digit count");
  return render_sig(sign(v) < 0, digs, e);
}

std::optional<std::string> dec_sig_interval(const RatInterval& iv, unsigned sig) {
  if (iv.contains_zero()) return std::nullopt;
  std::string a = dec_sig_trunc(iv.lo, sig);
  std::string b = dec_sig_trunc(iv.hi, sig);
  if (a == b) return a;
  return std::nullopt;
}

std::optional<std::string> dec_fixed_interval(const RatInterval& iv, unsigned decimals) {
  if (sign(iv.lo) < 0 && sign(iv.hi) > 0) return std::nullopt;
  std::string a = dec_fixed_trunc(iv.lo, decimals);
  std::string b = dec_fixed_trunc(iv.hi, decimals);
  if (a == b) return a;
  return std::nullopt;
}

}  // namespace crowdest
