#include "crowdest/estimator.hpp"

#include "crowdest/errors.hpp"
#include "crowdest/exact_core.hpp"
#include "crowdest/poly_lab.hpp"

namespace crowdest {

namespace {

BigInt radicand(long s1, long s2) {
  BigInt a(s1), b(2 * s2 + 1);
  return 16 * a * a + 16 * a + b * b;
}

void require_positive(long s1, long s2, const char* who) {
  if (s1 < 1 || s2 < 1) throw DomainError(std::string(who) + " requires s1, s2 >= 1");
}

}  // namespace

long bracket_value(long s1, long s2) {
  if (s1 < 0 || s2 < 0) throw DomainError("bracket_value requires s1, s2 >= 0");
  BigInt T = radicand(s1, s2);
  BigInt r = isqrt(T);
  BigInt M = 4 * BigInt(s1) + 2 * BigInt(s2) + 3;
  if (r * r == T) {
    // T odd forces r odd, so M - r is even and the value is exact.
    BigInt v = (M - r) / 2;
    return static_cast<long>(v.get_si());
  }
  // sqrt(T) lies in (r, r+1); the value lies in the open unit-half interval
  // ((M-r-1)/2, (M-r)/2).
  BigInt t = M - r;
  BigInt v = (t % 2 == 0) ? BigInt(t / 2 - 1) : BigInt((t - 1) / 2);
  return static_cast<long>(v.get_si());
}

D0Result d0_value(long s1, long s2) {
  if (s1 < 1) throw DomainError("d0_value requires s1 >= 1");
  BigInt T = radicand(s1, s2);
  BigInt r = isqrt(T);
  BigInt u = r - 2 * BigInt(s2) - 3;
  D0Result res;
  if (r * r == T) {
    res.d1_integer = true;  // r odd, so u is even
    res.d0 = static_cast<long>(BigInt(u / 2).get_si());
    return res;
  }
  // floor((sqrt(T) - 2s2 - 3)/2) with sqrt(T) in (r, r+1) equals floor(u/2).
  BigInt v;
  mpz_fdiv_q_2exp(v.get_mpz_t(), u.get_mpz_t(), 1);
  res.d0 = static_cast<long>(v.get_si());
  return res;
}

GEstimate g_exact(long s1, long s2) {
  require_positive(s1, s2, "g_exact");
  GEstimate e;
  e.s1 = s1;
  e.s2 = s2;
  e.bracket = bracket_value(s1, s2);

  // Small-s2 regime: (2s2+1)^2 <= 8s1+9 gives g = s2 directly, no
  // polynomial work (and 2x > d may fail there).
  BigInt lhs = BigInt(2 * s2 + 1) * BigInt(2 * s2 + 1);
  if (lhs <= 8 * BigInt(s1) + 9) {
    e.g = s2;
    e.delta = static_cast<int>(s2 - e.bracket);
    D0Result d0 = d0_value(s1, s2);
    e.d0 = d0.d0;
    e.d1_integer = d0.d1_integer;
    return e;
  }

  D0Result d0 = d0_value(s1, s2);
  e.d0 = d0.d0;
  e.d1_integer = d0.d1_integer;
  if (d0.d1_integer || d0.d0 < 0) {
    // d1 integer: delta = 0 and g = 2s1 - d1 = bracket. d0 < 0 only beyond
    // saturation, where g = 2s1 = bracket.
    e.delta = 0;
    e.g = e.bracket;
    return e;
  }

  CondCertificate cert;
  cert.middle =
      make_rat(2 * BigInt(s1) * (BigInt(s1) + 1), e.d0 + 1) - make_rat(e.d0 + 2, 2) - Rat(s2);
  cert.neg_ratio = -ratio_at(static_cast<unsigned>(e.d0), Rat(s1));
  cert.holds = sign(cert.middle) > 0 && cert.middle <= cert.neg_ratio;
  e.delta = cert.holds ? 1 : 0;
  e.g = e.bracket + e.delta;
  e.certificate = std::move(cert);
  return e;
}

bool feq_condition(long x, unsigned d, long s2) {
  if (2 * x <= static_cast<long>(d)) throw DomainError("feq_condition requires 2x > d");
  Rat rhs = make_rat(2 * BigInt(x) * (BigInt(x) + 1), d + 1) - make_rat(d + 2, 2) +
            ratio_at(d, Rat(x));
  return Rat(s2) >= rhs;
}

long top_threshold(long s1, unsigned d) {
  if (d > 4) throw DomainError("top_threshold is established for 0 <= d <= 4 only");
  if (2 * s1 <= static_cast<long>(d)) throw DomainError("top_threshold requires s1 > d/2");
  Rat rhs = make_rat(2 * BigInt(s1) * (BigInt(s1) + 1), d + 1) - make_rat(d + 2, 2);
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), rhs.get_num().get_mpz_t(), rhs.get_den().get_mpz_t());
  return static_cast<long>(c.get_si());
}

long union_mode_closed_form(long s1, long s2) {
  require_positive(s1, s2, "union_mode_closed_form");
  GEstimate e = g_exact(s1, s2);
  BigInt T = radicand(s1, s2);
  BigInt r = isqrt(T);
  BigInt c;
  if (r * r == T) {
    c = (r - 3) / 2;  // r odd, exact
  } else {
    // ceil of a value in the open interval ((r-3)/2, (r-2)/2).
    BigInt u = r - 3;
    c = (u % 2 == 0) ? BigInt(u / 2 + 1) : BigInt((u + 1) / 2);
  }
  long mode = static_cast<long>(c.get_si()) - e.delta;
  if (mode != 2 * s1 + s2 - e.g)
    throw InternalError("union mode ceiling disagrees with 2s1+s2-g");
  return mode;
}

std::vector<GTableRow> g_table(long s1, long s2_lo, long s2_hi) {
  std::vector<GTableRow> rows;
  for (long s2 = s2_lo; s2 <= s2_hi; ++s2) {
    ArgmaxReport scan = argmax_scan(Scenario(s1, s2, s1));
    long g = scan.n_star;
    if (scan.tied && s1 >= 1 && s2 >= 1) {
      long closed = g_exact(s1, s2).g;
      if (closed == scan.n_star + 1) g = closed;
    }
    if (!rows.empty() && rows.back().g == g)
      rows.back().s2_hi = s2;
    else
      rows.push_back({s2, s2, g});
  }
  return rows;
}

std::vector<long> delta_cases(long s1, long s2_max) {
  std::vector<long> out;
  for (long s2 = 1; s2 <= s2_max; ++s2)
    if (g_exact(s1, s2).delta == 1) out.push_back(s2);
  return out;
}

std::string bracket_expression_decimal(long s1, long s2, unsigned decimals) {
  // value = (M - sqrt(T)) / 2 with M = 4s1 + 2s2 + 3.
  BigInt T = radicand(s1, s2);
  RatInterval s = sqrt_enclosure(T, decimals + 6);
  Rat m(4 * BigInt(s1) + 2 * BigInt(s2) + 3);
  RatInterval v{(m - s.hi) / 2, (m - s.lo) / 2};
  auto out = dec_fixed_interval(v, decimals);
  if (!out) throw InternalError("bracket expression not pinned by guard digits");
  return *out;
}

}  // namespace crowdest
