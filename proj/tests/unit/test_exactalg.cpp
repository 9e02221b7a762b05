#include <doctest.h>

#include <random>

#include "printing.hpp"
#include "quiverkac/errors.hpp"
#include "quiverkac/mseries.hpp"

using namespace quiverkac;

namespace {

const IntPoly q = IntPoly::q();

RationalFunction rf(IntPoly n, IntPoly d) { return RationalFunction(std::move(n), std::move(d)); }

// All polynomials of degree <= deg with coefficients in [-r, r].
std::vector<IntPoly> small_polys(int deg, int r) {
  std::vector<IntPoly> out;
  std::vector<long> c(static_cast<std::size_t>(deg + 1), -r);
  while (true) {
    std::vector<Integer> coeffs(c.begin(), c.end());
    out.emplace_back(coeffs);
    std::size_t k = 0;
    while (k < c.size()) {
      if (++c[k] <= r) break;
      c[k] = -r;
      ++k;
    }
    if (k == c.size()) return out;
  }
}

MSeries random_series(const Box& box, std::mt19937& rng, bool unit_constant) {
  std::uniform_int_distribution<int> coef(-3, 3);
  MSeries s(box);
  for (const auto& v : box.points()) {
    IntPoly num{coef(rng), coef(rng), coef(rng)};
    IntPoly den{coef(rng), coef(rng)};
    if (den.is_zero()) den = IntPoly(1);
    s.set(v, RationalFunction(num, den));
  }
  if (unit_constant) s.set(DimVector(box.rank()), 1);
  return s;
}

}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(IntPoly().degree() == -1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{1, 2, 0}.degree() == 1);
  CHECK((q * q + q + 1).to_string() == "q^2+q+1");
  CHECK((-q * q * q + 2 * q).to_string() == "-q^3+2q");
  CHECK(IntPoly().to_string() == "0");
  CHECK(IntPoly{6, 4}.content() == 2);
  CHECK(IntPoly{-6, -4}.primitive_part() == IntPoly{3, 2});
  CHECK((q * q - 1).divexact(q - 1) == q + 1);
  CHECK_THROWS_AS((q * q + 1).divexact(q - 1), NonPolynomial);
  CHECK_THROWS_AS((IntPoly{1, 1}.divexact(IntPoly{0, 2})), NonPolynomial);
  CHECK((q + 1).substitute_power(3) == q * q * q + 1);
  CHECK((q + 1).evaluate(Integer(4)) == 5);
}

TEST_CASE("polynomial gcd") {
  CHECK(gcd((q - 1) * (q + 2), (q - 1) * (q + 3)) == q - 1);
  CHECK(gcd(q * q + 1, q + 1) == IntPoly(1));
  CHECK(gcd(IntPoly{2, 2}, IntPoly{4, 4}) == IntPoly{2, 2});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == q - 1);
  CHECK(cyclotomic(2) == q + 1);
  CHECK(cyclotomic(4) == q * q + 1);
  CHECK(cyclotomic(6) == q * q - q + 1);
  for (int n = 1; n <= 24; ++n) {
    IntPoly prod(1);
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) prod *= cyclotomic(d);
    }
    CHECK(prod == IntPoly::monomial(1, n) - 1);
  }
}

TEST_CASE("rational function normal form") {
  const RationalFunction f = rf(q * q - 1, 2 * q - 2);
  CHECK(f.numerator() == q + 1);
  CHECK(f.denominator() == IntPoly(2));
  const RationalFunction g = rf(IntPoly(1), -q + 1);
  CHECK(g.denominator() == q - 1);
  CHECK(g.numerator() == IntPoly(-1));
  CHECK(rf(IntPoly(0), q + 7) == RationalFunction(0));
  CHECK(RationalFunction::q_power(-2) * RationalFunction::q_power(2) == RationalFunction(1));
  CHECK(rf(q + 1, q - 1).to_string() == "(q+1)/(q-1)");
  CHECK_THROWS_AS(rf(q, IntPoly()), UsageError);
}

TEST_CASE("ring axioms on small polynomials") {
  const auto polys = small_polys(1, 2);
  for (const auto& a : polys) {
    for (const auto& b : polys) {
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      for (const auto& c : polys) {
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("ring axioms on polynomials of degree three") {
  std::mt19937 rng(7);
  const auto polys = small_polys(3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, polys.size() - 1);
  for (int t = 0; t < 2000; ++t) {
    const auto& a = polys[pick(rng)];
    const auto& b = polys[pick(rng)];
    const auto& c = polys[pick(rng)];
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("field axioms on rational functions") {
  const auto polys = small_polys(1, 2);
  std::vector<RationalFunction> fs;
  for (const auto& n : polys) {
    for (const auto& d : polys) {
      if (!d.is_zero()) fs.push_back(rf(n, d));
    }
  }
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
  for (int t = 0; t < 3000; ++t) {
    const auto& a = fs[pick(rng)];
    const auto& b = fs[pick(rng)];
    const auto& c = fs[pick(rng)];
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RationalFunction(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("substitute_power") {
  CHECK(substitute_power(RationalFunction(q), 3) == RationalFunction(q * q * q));
  CHECK(substitute_power(rf(q + 1, q - 1), 2) == rf(q * q + 1, q * q - 1));
  CHECK(substitute_power(RationalFunction(q * q - q), 2) == RationalFunction(q * q * q * q - q * q));
  CHECK_THROWS_AS(substitute_power(RationalFunction(q), 0), UsageError);
  const RationalFunction f = rf(q * q + 2, q * q * q - q + 1);
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) CHECK(substitute_power(substitute_power(f, j), k) == substitute_power(f, j * k));
  }
}

TEST_CASE("to_polynomial") {
  CHECK(to_polynomial(rf(q * q - 1, q - 1)) == q + 1);
  CHECK(to_polynomial(rf(q * q * q - q, q - 1)) == q * q + q);
  CHECK_THROWS_AS(to_polynomial(rf(IntPoly(1), q - 1)), NonPolynomial);
  CHECK_THROWS_AS(to_polynomial(rf(q, IntPoly(2))), NonIntegral);
  for (const auto& p : small_polys(2, 2)) CHECK(to_polynomial(RationalFunction(p)) == p);
}

TEST_CASE("eval_at") {
  CHECK(eval_at(rf(q + 1, q - 1), 0) == -1);
  CHECK(eval_at(RationalFunction(q * q + q), 3) == 12);
  CHECK(eval_at(rf(IntPoly(1), q + 1), Rational(1, 2)) == Rational(2, 3));
  CHECK_THROWS_AS(eval_at(rf(IntPoly(1), q - 1), 1), PoleAtPoint);
}

TEST_CASE("series multiplication") {
  const Box box(DimVector{2});
  const DimVector x{1};
  const DimVector x2{2};
  const MSeries one = MSeries::one(box);
  MSeries s(box);
  s.set(DimVector{0}, 3);
  s.set(x, rf(q, q + 1));
  CHECK(series_mul(one, s) == s);
  const MSeries a = one + MSeries::monomial(box, x);
  const MSeries sq = series_mul(a, a);
  CHECK(sq[x] == RationalFunction(2));
  CHECK(sq[x2] == RationalFunction(1));
  const MSeries b = one - MSeries::monomial(box, x);
  const MSeries c = one + MSeries::monomial(box, x) + MSeries::monomial(box, x2);
  CHECK(series_mul(b, c) == one);
  CHECK_THROWS_AS(series_mul(one, MSeries::one(Box(DimVector{3}))), BoundMismatch);
}

TEST_CASE("series multiplication is commutative and associative") {
  std::mt19937 rng(3);
  const Box box(DimVector{2, 2});
  for (int t = 0; t < 5; ++t) {
    const MSeries a = random_series(box, rng, false);
    const MSeries b = random_series(box, rng, false);
    const MSeries c = random_series(box, rng, false);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
  }
}

TEST_CASE("series inverse") {
  const Box box(DimVector{3});
  const MSeries one = MSeries::one(box);
  CHECK(series_inverse(one) == one);
  const MSeries geometric = series_inverse(one - MSeries::monomial(box, DimVector{1}));
  for (int k = 0; k <= 3; ++k) CHECK(geometric[DimVector{k}] == RationalFunction(1));

  const Box box2(DimVector{2});
  const RationalFunction u = rf(IntPoly(1), q - 1);
  const MSeries inv = series_inverse(MSeries::one(box2) + MSeries::monomial(box2, DimVector{1}, u));
  CHECK(inv[DimVector{1}] == -u);
  CHECK(inv[DimVector{2}] == u * u);

  CHECK_THROWS_AS(series_inverse(MSeries::monomial(box, DimVector{1})), ZeroConstantTerm);

  std::mt19937 rng(5);
  for (const DimVector bound : {DimVector{3}, DimVector{2, 2}, DimVector{3, 3}}) {
    const Box b(bound);
    const MSeries a = random_series(b, rng, true);
    CHECK(series_mul(a, series_inverse(a)) == MSeries::one(b));
  }
}

TEST_CASE("series logarithm") {
  const Box box(DimVector{3});
  const MSeries one = MSeries::one(box);
  CHECK(series_log(one) == MSeries(box));
  const MSeries one_minus_x = one - MSeries::monomial(box, DimVector{1});
  const MSeries l = series_log(one_minus_x);
  CHECK(l[DimVector{1}] == RationalFunction(-1));
  CHECK(l[DimVector{2}] == RationalFunction(Rational(-1, 2)));
  CHECK(l[DimVector{3}] == RationalFunction(Rational(-1, 3)));
  const MSeries sq = series_log(series_mul(one_minus_x, one_minus_x));
  CHECK(sq[DimVector{1}] == RationalFunction(-2));
  CHECK(sq[DimVector{2}] == RationalFunction(-1));
  CHECK_THROWS_AS(series_log(one + one), ZeroConstantTerm);

  std::mt19937 rng(9);
  const Box b(DimVector{2, 2});
  for (int t = 0; t < 3; ++t) {
    const MSeries x = random_series(b, rng, true);
    const MSeries y = random_series(b, rng, true);
    CHECK(series_log(series_mul(x, y)) == series_log(x) + series_log(y));
  }
}

TEST_CASE("box regions") {
  const Box box(DimVector{2, 1});
  CHECK(box.box_volume() == 6);
  CHECK(box.points().front() == DimVector{0, 0});
  CHECK(box.points().back() == DimVector{2, 1});
  CHECK(box.contains(DimVector{1, 1}));
  CHECK_FALSE(box.contains(DimVector{0, 2}));
  const Box capped(DimVector{2, 2}, 2);
  CHECK(capped.points().size() == 6);
  CHECK_FALSE(capped.contains(DimVector{2, 1}));
  CHECK_THROWS_AS(DimVector({1, -1}), UsageError);
  CHECK(parse_dimvector("1, 2,0") == DimVector{1, 2, 0});
  CHECK_THROWS_AS(parse_dimvector("1,x"), UsageError);
  CHECK_THROWS_AS((DimVector{1} - DimVector{2}), UsageError);
}
