#include "quiverkac/mseries.hpp"

#include <utility>

#include "quiverkac/errors.hpp"

namespace quiverkac {

namespace {

const RationalFunction& zero_coefficient() {
  static const RationalFunction z;
  return z;
}

}  // namespace

MSeries::MSeries(Box box) : box_(std::move(box)), coeffs_(box_.box_volume()) {}

MSeries MSeries::one(const Box& box) {
  MSeries s(box);
  s.coeffs_[0] = 1;
  return s;
}

MSeries MSeries::monomial(const Box& box, const DimVector& v, RationalFunction c) {
  MSeries s(box);
  if (box.contains(v)) s.coeffs_[box.index(v)] = std::move(c);
  return s;
}

const RationalFunction& MSeries::operator[](const DimVector& v) const {
  if (!box_.contains(v)) return zero_coefficient();
  return coeffs_[box_.index(v)];
}

void MSeries::set(const DimVector& v, RationalFunction c) {
  if (!box_.contains(v)) throw BoundMismatch("exponent " + v.to_string() + " outside the truncation region");
  coeffs_[box_.index(v)] = std::move(c);
}

void MSeries::add_to(const DimVector& v, const RationalFunction& c) {
  if (!box_.contains(v)) throw BoundMismatch("exponent " + v.to_string() + " outside the truncation region");
  coeffs_[box_.index(v)] += c;
}

void MSeries::check_same_box(const MSeries& o) const {
  if (!(box_ == o.box_)) throw BoundMismatch("series truncated to different regions");
}

MSeries& MSeries::operator+=(const MSeries& o) {
  check_same_box(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

MSeries& MSeries::operator-=(const MSeries& o) {
  check_same_box(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

MSeries MSeries::operator-() const {
  MSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

MSeries& MSeries::scale(const RationalFunction& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }

MSeries series_mul(const MSeries& a, const MSeries& b) {
  if (!(a.box() == b.box())) throw BoundMismatch("series truncated to different regions");
  const Box& box = a.box();
  MSeries out(box);
  const auto& pts = box.points();
  for (const auto& u : pts) {
    const RationalFunction& au = a[u];
    if (au.is_zero()) continue;
    for (const auto& t : pts) {
      const RationalFunction& bt = b[t];
      if (bt.is_zero()) continue;
      DimVector v = u + t;
      if (!box.contains(v)) continue;
      out.add_to(v, au * bt);
    }
  }
  return out;
}

MSeries series_inverse(const MSeries& a) {
  const Box& box = a.box();
  const DimVector zero(box.rank());
  const RationalFunction& a0 = a[zero];
  if (a0.is_zero()) throw ZeroConstantTerm("series has no inverse: constant term is zero");
  const RationalFunction inv0 = RationalFunction(1) / a0;
  MSeries b(box);
  b.set(zero, inv0);
  for (const auto& v : box.points()) {
    if (v.is_zero()) continue;
    RationalFunction acc;
    // b_v = -b_0 * sum_{0 < u <= v} a_u b_{v-u}
    for (const auto& u : box.points()) {
      if (u.total() > v.total()) break;
      if (u.is_zero() || !u.fits_in(v)) continue;
      const RationalFunction& au = a[u];
      if (au.is_zero()) continue;
      const RationalFunction& bw = b[v - u];
      if (bw.is_zero()) continue;
      acc += au * bw;
    }
    if (!acc.is_zero()) b.set(v, -(acc * inv0));
  }
  return b;
}

MSeries series_log(const MSeries& a) {
  const Box& box = a.box();
  const DimVector zero(box.rank());
  if (!(a[zero] == RationalFunction(1))) throw ZeroConstantTerm("logarithm needs constant term 1");
  // With E the total-degree operator, E(log a) * a = E(a):
  //   |v| L_v = |v| a_v - sum_{0 < u < v} |u| L_u a_{v-u}.
  MSeries out(box);
  for (const auto& v : box.points()) {
    if (v.is_zero()) continue;
    const int n = v.total();
    RationalFunction acc = a[v] * RationalFunction(n);
    for (const auto& u : box.points()) {
      if (u.total() >= n) break;
      if (u.is_zero() || !u.fits_in(v)) continue;
      const RationalFunction& lu = out[u];
      if (lu.is_zero()) continue;
      const RationalFunction& rest = a[v - u];
      if (rest.is_zero()) continue;
      acc -= lu * rest * RationalFunction(u.total());
    }
    if (!acc.is_zero()) out.set(v, acc / RationalFunction(n));
  }
  return out;
}

std::vector<Rational> evaluate_coefficients(const MSeries& a, const Rational& q) {
  std::vector<Rational> out;
  out.reserve(a.box().points().size());
  for (const auto& v : a.box().points()) out.push_back(eval_at(a[v], q));
  return out;
}

}  // namespace quiverkac
