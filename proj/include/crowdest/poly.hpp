#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crowdest/numeric.hpp"

namespace crowdest {

/// Dense univariate polynomial over the exact rationals, coefficients in
/// ascending degree order. The zero polynomial has an empty coefficient
/// vector and degree -1. Coefficients are kept canonical (lowest terms,
/// positive denominator) by mpq arithmetic.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs);
  static Polynomial constant(const Rat& c);
  static Polynomial monomial(const Rat& c, unsigned degree);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k; zero beyond the degree.
  const Rat& coeff(unsigned k) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& s) const;
  Polynomial derivative() const;

  Rat eval(const Rat& x) const;
  /// Horner evaluation in interval arithmetic; sound enclosure of the range.
  RatInterval eval_interval(const RatInterval& x) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// JSON-ready coefficient strings "num/den", ascending degree.
  std::vector<std::string> coeff_strings() const;
  /// CSV rows "degree,numerator,denominator" under a header.
  void write_csv(std::ostream& out, char sep = ',') const;

private:
  void normalize();
  std::vector<Rat> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Exact Euclidean division: dividend = quotient*divisor + remainder with
/// deg(remainder) < deg(divisor). Throws DomainError on a zero divisor.
DivisionResult poly_divide(const Polynomial& dividend, const Polynomial& divisor);

/// Integer polynomials (ascending coefficients, no trailing zeros) back the
/// falling-factorial products and the Sturm machinery.
using IntPoly = std::vector<BigInt>;

namespace intpoly {

void normalize(IntPoly& p);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly derivative(const IntPoly& p);
/// gcd of the coefficients (positive; 0 for the zero polynomial).
BigInt content(const IntPoly& p);
/// p divided by its content.
IntPoly primitive_part(IntPoly p);
/// Clears denominators of a rational polynomial and removes the content;
/// the result has the same roots and the same sign pattern up to a positive
/// scalar.
IntPoly from_polynomial(const Polynomial& p);
/// Exact sign of p at the rational point x.
int sign_at(const IntPoly& p, const Rat& x);

}  // namespace intpoly

}  // namespace crowdest
