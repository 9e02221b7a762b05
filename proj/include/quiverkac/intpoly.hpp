#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace quiverkac {

using Integer = mpz_class;
using Rational = mpq_class;

// Polynomial in q with arbitrary-precision integer coefficients, stored
// ascending with no trailing zeros. The zero polynomial has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c);  // NOLINT(google-explicit-constructor)
  IntPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  IntPoly(std::initializer_list<long> ascending);
  explicit IntPoly(std::vector<Integer> ascending);

  static IntPoly monomial(const Integer& c, int degree);
  static IntPoly q() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  // Coefficient of q^k; zero outside the stored range.
  Integer coefficient(int k) const;
  const Integer& leading() const { return coeffs_.back(); }

  // gcd of the coefficients, nonnegative; zero for the zero polynomial.
  Integer content() const;
  // Divided by its content, sign fixed so the leading coefficient is positive.
  IntPoly primitive_part() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  IntPoly operator-() const;

  // Divides every coefficient by c, which must divide all of them.
  IntPoly divexact(const Integer& c) const;
  // Exact division by a nonzero polynomial; throws NonPolynomial when the
  // quotient would leave a remainder or need fractions.
  IntPoly divexact(const IntPoly& d) const;

  IntPoly shifted(int k) const;  // times q^k, k >= 0
  // q -> q^k
  IntPoly substitute_power(int k) const;

  Rational evaluate(const Rational& x) const;
  Integer evaluate(const Integer& x) const;

  std::string to_string(const std::string& var = "q") const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(IntPoly a, const Integer& c);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Greatest common divisor in Z[q], with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// The d-th cyclotomic polynomial.
IntPoly cyclotomic(int d);

}  // namespace quiverkac
