#include "crowdest/poly.hpp"

#include <ostream>

#include "crowdest/errors.hpp"

namespace crowdest {

namespace {
const Rat kZero(0);
}

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const Rat& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rat& c, unsigned degree) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rat& Polynomial::coeff(unsigned k) const {
  if (k >= coeffs_.size()) return kZero;
  return coeffs_[k];
}

const Rat& Polynomial::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rat> r(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rat> r(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rat> r(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sign(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Rat& s) const {
  std::vector<Rat> r(coeffs_);
  for (auto& c : r) c *= s;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rat> r(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(r));
}

Rat Polynomial::eval(const Rat& x) const {
  Rat r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

RatInterval Polynomial::eval_interval(const RatInterval& x) const {
  RatInterval r{Rat(0), Rat(0)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = interval_mul(r, x);
    r.lo += *it;
    r.hi += *it;
  }
  return r;
}

std::vector<std::string> Polynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  return out;
}

void Polynomial::write_csv(std::ostream& out, char sep) const {
  out << "degree" << sep << "numerator" << sep << "denominator" << "\n";
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out << i << sep << coeffs_[i].get_num().get_str() << sep << coeffs_[i].get_den().get_str()
        << "\n";
}

DivisionResult poly_divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero polynomial");
  std::vector<Rat> rem(dividend.coeffs());
  long dn = divisor.degree();
  long qn = dividend.degree() - dn;
  if (qn < 0) return {Polynomial(), dividend};
  std::vector<Rat> quot(static_cast<size_t>(qn) + 1, Rat(0));
  const Rat& lead = divisor.leading();
  for (long k = qn; k >= 0; --k) {
    Rat c = rem[static_cast<size_t>(k + dn)] / lead;
    quot[static_cast<size_t>(k)] = c;
    if (sign(c) == 0) continue;
    for (long i = 0; i <= dn; ++i)
      rem[static_cast<size_t>(k + i)] -= c * divisor.coeff(static_cast<unsigned>(i));
  }
  rem.resize(static_cast<size_t>(dn > 0 ? dn : 0));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace intpoly {

void normalize(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  normalize(r);
  return r;
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(IntPoly p) {
  BigInt g = content(p);
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

IntPoly from_polynomial(const Polynomial& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  IntPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.push_back(BigInt(c.get_num() * (l / c.get_den())));
  normalize(r);
  return primitive_part(std::move(r));
}

int sign_at(const IntPoly& p, const Rat& x) {
  if (p.empty()) return 0;
  // sum c_i a^i b^(n-i) has the sign of p(a/b) since b > 0.
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt acc = p.back();
  BigInt bpow = 1;
  for (size_t i = p.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + p[i] * bpow;
  }
  return sgn(acc);
}

}  // namespace intpoly

}  // namespace crowdest
