#pragma once

#include <vector>

#include "quiverkac/dimvector.hpp"
#include "quiverkac/ratfunc.hpp"

namespace quiverkac {

// Power series in X_1..X_n with coefficients in Q(q), truncated to a
// downward-closed region. Coefficients outside the region are not tracked;
// since exponents only add, every ring operation is exact on the region.
class MSeries {
 public:
  MSeries() = default;
  explicit MSeries(Box box);

  static MSeries one(const Box& box);
  // c * X^v (zero if v lies outside the region).
  static MSeries monomial(const Box& box, const DimVector& v, RationalFunction c = 1);

  const Box& box() const { return box_; }
  // Zero outside the region.
  const RationalFunction& operator[](const DimVector& v) const;
  void set(const DimVector& v, RationalFunction c);
  void add_to(const DimVector& v, const RationalFunction& c);

  MSeries& operator+=(const MSeries& o);
  MSeries& operator-=(const MSeries& o);
  MSeries operator-() const;
  MSeries& scale(const RationalFunction& c);

  friend bool operator==(const MSeries& a, const MSeries& b) {
    return a.box_ == b.box_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same_box(const MSeries& o) const;
  Box box_;
  std::vector<RationalFunction> coeffs_;
};

MSeries operator+(MSeries a, const MSeries& b);
MSeries operator-(MSeries a, const MSeries& b);

// Cauchy product on the common region; BoundMismatch if regions differ.
MSeries series_mul(const MSeries& a, const MSeries& b);
// Multiplicative inverse by graded recursion; ZeroConstantTerm if a(0) = 0.
MSeries series_inverse(const MSeries& a);
// Formal logarithm; requires a(0) = 1 (ZeroConstantTerm otherwise).
MSeries series_log(const MSeries& a);
// Coefficientwise q -> value.
std::vector<Rational> evaluate_coefficients(const MSeries& a, const Rational& q);

}  // namespace quiverkac
