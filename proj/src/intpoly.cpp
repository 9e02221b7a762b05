#include "quiverkac/intpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "quiverkac/errors.hpp"

namespace quiverkac {

IntPoly::IntPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

IntPoly::IntPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  IntPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
  p.coeffs_.back() = c;
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  return divexact(g);
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

IntPoly IntPoly::divexact(const Integer& c) const {
  IntPoly r = *this;
  for (auto& a : r.coeffs_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  if (d.is_zero()) throw NonPolynomial("division by the zero polynomial");
  if (is_zero()) return {};
  if (degree() < d.degree()) throw NonPolynomial("inexact polynomial division");
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quot(static_cast<std::size_t>(degree() - d.degree()) + 1, 0);
  const int dd = d.degree();
  const Integer& lc = d.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw NonPolynomial("inexact polynomial division");
    }
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.coeffs_[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(k)] = std::move(f);
  }
  for (const auto& r : rem) {
    if (r != 0) throw NonPolynomial("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.coeffs_.assign(static_cast<std::size_t>(k), 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

IntPoly IntPoly::substitute_power(int k) const {
  if (k == 1 || is_constant()) return *this;
  IntPoly r;
  r.coeffs_.assign(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * static_cast<std::size_t>(k)] = coeffs_[i];
  return r;
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      os << (first ? "-" : "-");
    } else if (!first) {
      os << "+";
    }
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  std::vector<Integer> out(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw NonPolynomial("pseudo-remainder by zero");
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  const Integer& lc = b.leading();
  const auto& bc = b.coefficients();
  int dr = static_cast<int>(r.size()) - 1;
  int steps = a.degree() - db + 1;
  while (dr >= db && dr >= 0) {
    Integer top = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lc;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= top * bc[static_cast<std::size_t>(j)];
    --steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  IntPoly rem(std::move(r));
  if (steps > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps));
    rem *= f;
  }
  return rem;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  Integer c;
  Integer ca = a.content();
  Integer cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPoly(c);
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x * c;
}

namespace {

IntPoly cyclotomic_locked(int d, std::map<int, IntPoly>& cache) {
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  // q^d - 1 = prod_{e | d} Phi_e(q)
  IntPoly p = IntPoly::monomial(1, d) - IntPoly(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = p.divexact(cyclotomic_locked(e, cache));
  }
  cache.emplace(d, p);
  return p;
}

}  // namespace

IntPoly cyclotomic(int d) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  std::lock_guard lock(mu);
  return cyclotomic_locked(d, cache);
}

}  // namespace quiverkac
