#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace crowdest {

using BigInt = mpz_class;
using Rat = mpq_class;

/// num/den reduced to lowest terms with positive denominator.
Rat make_rat(const BigInt& num, const BigInt& den);
Rat make_rat(long num, long den);

BigInt pow10(unsigned long k);

/// Floor of the square root of a nonnegative integer.
BigInt isqrt(const BigInt& v);
bool is_perfect_square(const BigInt& v);

BigInt factorial(unsigned long n);

/// C(n, k); 0 outside 0 <= k <= n. Computed multiplicatively with exact
/// prefix division, no factorial tables.
BigInt binom(const BigInt& n, const BigInt& k);
BigInt binom(long n, long k);

/// Falling factorial x(x-1)...(x-i+1); empty product is 1.
Rat falling(const Rat& x, unsigned long i);

int sign(const Rat& v);

/// A closed rational interval [lo, hi].
struct RatInterval {
  Rat lo;
  Rat hi;

  bool contains_zero() const;
  Rat width() const { return hi - lo; }
};

RatInterval interval_add(const RatInterval& a, const RatInterval& b);
RatInterval interval_mul(const RatInterval& a, const RatInterval& b);

/// Encloses sqrt(v) for integer v >= 0 in an interval of width 10^-frac_digits
/// (width 0 when v is a perfect square).
RatInterval sqrt_enclosure(const BigInt& v, unsigned frac_digits);

/// |v| truncated toward zero to `decimals` digits after the point.
std::string dec_fixed_trunc(const Rat& v, unsigned decimals);

/// v rounded to nearest (ties away from zero) at `decimals` digits.
std::string dec_fixed_round(const Rat& v, unsigned decimals);

/// v truncated toward zero to `sig` significant digits. v == 0 prints "0".
std::string dec_sig_trunc(const Rat& v, unsigned sig);

/// The common `sig`-significant-digit truncation of every value in [lo, hi],
/// or nullopt when the interval does not pin one down.
std::optional<std::string> dec_sig_interval(const RatInterval& iv, unsigned sig);

/// Same for fixed `decimals` digits after the point.
std::optional<std::string> dec_fixed_interval(const RatInterval& iv, unsigned decimals);

}  // namespace crowdest
