#include "quiverkac/ratfunc.hpp"

#include <utility>

#include "quiverkac/errors.hpp"

namespace quiverkac {

RationalFunction::RationalFunction(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw PoleAtPoint("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = gcd(num, den).primitive_part();
  if (g.degree() > 0) {
    num = num.divexact(g);
    den = den.divexact(g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
  normalize_units();
}

RationalFunction::RationalFunction(const Rational& c)
    : RationalFunction(IntPoly(c.get_num()), IntPoly(c.get_den())) {}

RationalFunction RationalFunction::q_power(int k) {
  if (k >= 0) return RationalFunction(IntPoly::monomial(1, k), IntPoly(1), Reduced{});
  return RationalFunction(IntPoly(1), IntPoly::monomial(1, -k), Reduced{});
}

void RationalFunction::normalize_units() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  Integer cn = num_.content();
  Integer cd = den_.content();
  Integer g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) g = -g;
  if (g != 1) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      return *this;
    }
    if (den_.degree() > 0) {
      *this = RationalFunction(std::move(num_), std::move(den_));
    } else {
      normalize_units();
    }
    return *this;
  }
  IntPoly g = gcd(den_, o.den_).primitive_part();
  IntPoly bg = den_.divexact(g);
  IntPoly dg = o.den_.divexact(g);
  IntPoly num = num_ * dg + o.num_ * bg;
  if (num.is_zero()) {
    num_ = IntPoly();
    den_ = IntPoly(1);
    return *this;
  }
  // Only factors of g can be shared between num and the new denominator.
  IntPoly h = gcd(num, g).primitive_part();
  IntPoly den = bg * o.den_;
  if (h.degree() > 0) {
    num = num.divexact(h);
    den = den.divexact(h);
  }
  num_ = std::move(num);
  den_ = std::move(den);
  normalize_units();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    num_ = IntPoly();
    den_ = IntPoly(1);
    return *this;
  }
  IntPoly a = num_;
  IntPoly b = den_;
  IntPoly c = o.num_;
  IntPoly d = o.den_;
  if (a.degree() > 0 && d.degree() > 0) {
    IntPoly g = gcd(a, d).primitive_part();
    if (g.degree() > 0) {
      a = a.divexact(g);
      d = d.divexact(g);
    }
  }
  if (c.degree() > 0 && b.degree() > 0) {
    IntPoly g = gcd(c, b).primitive_part();
    if (g.degree() > 0) {
      c = c.divexact(g);
      b = b.divexact(g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize_units();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw PoleAtPoint("division by the zero rational function");
  RationalFunction inv(o.den_, o.num_, Reduced{});
  inv.normalize_units();
  return *this *= inv;
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Reduced{});
}

std::string RationalFunction::to_string() const {
  if (den_ == IntPoly(1)) return num_.to_string();
  auto wrap = [](const IntPoly& p) {
    std::string s = p.to_string();
    bool single_term = true;
    int nonzero = 0;
    for (const auto& c : p.coefficients()) nonzero += (c != 0);
    single_term = nonzero <= 1;
    return single_term ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

RationalFunction substitute_power(const RationalFunction& f, int k) {
  if (k < 1) throw UsageError("substitute_power needs k >= 1");
  // Coprimality survives q -> q^k, so only the unit normalization reruns.
  return RationalFunction(f.numerator().substitute_power(k), f.denominator().substitute_power(k));
}

IntPoly to_polynomial(const RationalFunction& f) {
  const IntPoly& den = f.denominator();
  if (den.degree() > 0) {
    throw NonPolynomial("not a polynomial: " + f.to_string());
  }
  const Integer& d = den.leading();
  if (d == 1) return f.numerator();
  for (const auto& c : f.numerator().coefficients()) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw NonIntegral("polynomial with non-integral coefficients: " + f.to_string());
    }
  }
  return f.numerator().divexact(d);
}

Rational eval_at(const RationalFunction& f, const Rational& x) {
  Rational den = f.denominator().evaluate(x);
  if (den == 0) throw PoleAtPoint("pole at q=" + x.get_str() + " of " + f.to_string());
  Rational r = f.numerator().evaluate(x) / den;
  r.canonicalize();
  return r;
}

Rational to_constant(const RationalFunction& f) {
  if (!f.is_constant()) throw NonPolynomial("not a constant: " + f.to_string());
  if (f.is_zero()) return 0;
  Rational r(f.numerator().leading(), f.denominator().leading());
  r.canonicalize();
  return r;
}

}  // namespace quiverkac
