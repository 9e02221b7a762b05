#pragma once

#include <string>

#include "quiverkac/intpoly.hpp"

namespace quiverkac {

// Element of Q(q), kept as a reduced ratio of integer polynomials.
//
// Canonical form: gcd(num, den) = 1 in Q[q], den has positive leading
// coefficient, and the contents of num and den share no common factor.
// Two equal rational functions therefore have identical representations.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Integer& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(IntPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(IntPoly num, IntPoly den);
  explicit RationalFunction(const Rational& c);

  // q^k for any integer k.
  static RationalFunction q_power(int k);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;

  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  struct Reduced {};
  RationalFunction(IntPoly num, IntPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_units();

  IntPoly num_;
  IntPoly den_;
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

// q -> q^k in numerator and denominator.
RationalFunction substitute_power(const RationalFunction& f, int k);

// The polynomial f equals; NonPolynomial when the denominator does not
// divide, NonIntegral when the quotient needs fractional coefficients.
IntPoly to_polynomial(const RationalFunction& f);

// Exact value at a rational point; PoleAtPoint if the denominator vanishes.
Rational eval_at(const RationalFunction& f, const Rational& x);

// The constant a rational function equals; throws NonPolynomial otherwise.
Rational to_constant(const RationalFunction& f);

}  // namespace quiverkac
