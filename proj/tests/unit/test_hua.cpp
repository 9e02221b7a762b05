#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "printing.hpp"
#include "quiverkac/errors.hpp"
#include "quiverkac/hua.hpp"

using namespace quiverkac;

namespace {

const IntPoly q = IntPoly::q();
const Quiver point(1);
const Quiver jordan(1, {{0, 0}});
const Quiver a2(2, {{0, 1}});
const Quiver kronecker(2, {{0, 1}, {0, 1}});

RationalFunction rf(IntPoly n, IntPoly d) { return RationalFunction(std::move(n), std::move(d)); }

}  // namespace

TEST_CASE("single terms") {
  const MultiPartition empty({Partition()});
  CHECK(hua_term(point, empty).weight() == RationalFunction(1));
  const MultiPartition one({Partition{1}});
  CHECK(hua_term(point, one).weight() == rf(IntPoly(1), q - 1));
  CHECK(hua_term(jordan, one).weight() == rf(q, q - 1));
  CHECK(hua_term(point, one, DimVector{2}).weight() == rf(q * q, q - 1));
}

TEST_CASE("hua series examples") {
  const MSeries s = hua_series(point, Box(DimVector{2}));
  CHECK(s[DimVector{0}] == RationalFunction(1));
  CHECK(s[DimVector{1}] == rf(IntPoly(1), q - 1));
  CHECK(hua_series(jordan, Box(DimVector{1}))[DimVector{1}] == rf(q, q - 1));
  CHECK(hua_series(kronecker, Box(DimVector{2, 2}))[DimVector{0, 0}] == RationalFunction(1));
}

TEST_CASE("framed numerator examples") {
  const Box box(DimVector{2});
  CHECK(framed_numerator_series(point, DimVector{0}, box) == hua_series(point, box));
  CHECK(framed_numerator_series(point, DimVector{2}, box)[DimVector{1}] == rf(q * q, q - 1));
  CHECK(framed_numerator_series(point, DimVector{1}, box)[DimVector{1}] == rf(q, q - 1));
  const Box kbox(DimVector{2, 2});
  CHECK(framed_numerator_series(kronecker, DimVector{0, 0}, kbox) == hua_series(kronecker, kbox));
}

TEST_CASE("single vertex series is the nilpotent class equation") {
  // there are q^(n^2 - n) nilpotent n x n matrices
  const MSeries s = hua_series(point, Box(DimVector{5}));
  for (int n = 0; n <= 5; ++n) {
    CHECK(s[DimVector{n}] == rf(IntPoly::monomial(1, n * n - n), oracle::general_linear_order(n)));
  }
}

TEST_CASE("series at small primes against nilpotent pair counts") {
  struct Case {
    Quiver quiver;
    DimVector bound;
    DimVector w;
  };
  const std::vector<Case> cases = {
      {jordan, DimVector{3}, DimVector{0}},
      {jordan, DimVector{2}, DimVector{2}},
      {a2, DimVector{2, 2}, DimVector{0, 0}},
      {a2, DimVector{2, 1}, DimVector{1, 1}},
      {kronecker, DimVector{2, 2}, DimVector{0, 0}},
      {kronecker, DimVector{2, 1}, DimVector{1, 0}},
      {Quiver(3, {{0, 1}, {1, 2}, {2, 0}}), DimVector{1, 1, 1}, DimVector{1, 0, 0}},
  };
  for (const auto& c : cases) {
    const Box box(c.bound);
    const MSeries s = framed_numerator_series(c.quiver, c.w, box);
    for (int p : {2, 3}) {
      for (const auto& v : box.points()) {
        CAPTURE(v);
        CAPTURE(p);
        CHECK(eval_at(s[v], Rational(p)) == oracle::nilpotent_pair_sum(c.quiver, v, c.w, p));
      }
    }
  }
}

TEST_CASE("series depend only on the underlying graph") {
  const Quiver a(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
  const Quiver b(3, {{1, 0}, {2, 1}, {2, 0}, {0, 1}});
  const Box box(DimVector{2, 2, 1});
  const MSeries s = hua_series(a, box);
  CHECK(s == hua_series(b, box));
  CHECK(s == hua_series(a.reversed(), box));
  CHECK(framed_numerator_series(a, DimVector{1, 0, 2}, box) == framed_numerator_series(b, DimVector{1, 0, 2}, box));
}

TEST_CASE("parallel accumulation matches serial") {
  const Box box(DimVector{3, 3});
  CHECK(hua_series(kronecker, box, 1) == hua_series(kronecker, box, 4));
  CHECK(framed_numerator_series(a2, DimVector{1, 2}, box, 1) == framed_numerator_series(a2, DimVector{1, 2}, box, 3));
}

TEST_CASE("A-polynomial examples") {
  CHECK(kac_a_polynomials(point, Box(DimVector{1})).at(DimVector{1}) == IntPoly(1));
  const auto j = kac_a_polynomials(jordan, Box(DimVector{3}));
  CHECK(j.at(DimVector{1}) == q);
  CHECK(kac_a_polynomials(kronecker, Box(DimVector{1, 1})).at(DimVector{1, 1}) == q + 1);
  CHECK(kac_a_polynomials(a2, Box(DimVector{1, 1})).at(DimVector{1, 1}) == IntPoly(1));
  const auto k = kac_a_polynomials(kronecker, Box(DimVector{2, 2}));
  CHECK(k.size() == 8);
  CHECK_FALSE(k.contains(DimVector{0, 0}));
}

TEST_CASE("constant terms") {
  APolyTable t;
  t.emplace(DimVector{1, 1}, q + 1);
  t.emplace(DimVector{1, 0}, q);
  t.emplace(DimVector{0, 1}, IntPoly());
  const auto c = constant_terms(t);
  CHECK(c.at(DimVector{1, 1}) == 1);
  CHECK(c.at(DimVector{1, 0}) == 0);
  CHECK(c.at(DimVector{0, 1}) == 0);
}

TEST_CASE("unit vectors have A-polynomial one") {
  for (const Quiver& quiver : {point, a2, kronecker, Quiver(3, {{0, 1}, {1, 2}, {2, 0}})}) {
    const DimVector bound(std::vector<int>(quiver.vertex_count(), 1));
    const auto t = kac_a_polynomials(quiver, Box(bound));
    for (std::size_t i = 0; i < quiver.vertex_count(); ++i) {
      CHECK(t.at(DimVector::unit(quiver.vertex_count(), i)) == IntPoly(1));
    }
  }
}

TEST_CASE("A-polynomials count absolutely indecomposables") {
  const std::vector<std::pair<Quiver, DimVector>> cases = {
      {point, DimVector{3}},
      {jordan, DimVector{3}},
      {Quiver(1, {{0, 0}, {0, 0}}), DimVector{2}},
      {a2, DimVector{2, 1}},
      {kronecker, DimVector{2, 2}},
      {Quiver(2, {{0, 1}, {0, 1}, {0, 1}}), DimVector{2, 1}},
      {Quiver(3, {{0, 1}, {1, 2}}), DimVector{1, 1, 1}},
      {Quiver(3, {{0, 1}, {1, 2}, {2, 0}}), DimVector{1, 1, 1}},
  };
  constexpr double kBudget = 3e5;
  for (const auto& [quiver, bound] : cases) {
    const auto table = kac_a_polynomials(quiver, Box(bound));
    for (const auto& [alpha, poly] : table) {
      if (alpha.total() > 3) continue;
      long coords = 0;
      for (const auto& e : quiver.edges()) coords += static_cast<long>(alpha[e.source]) * alpha[e.target];
      for (int p : {2, 3, 5}) {
        if (std::pow(p, coords) > kBudget) continue;
        CAPTURE(alpha);
        CAPTURE(p);
        CHECK(Rational(poly.evaluate(Integer(p))) == oracle::absolutely_indecomposable_count(quiver, alpha, p));
      }
    }
  }
}

TEST_CASE("inversion reproduces the product form") {
  // Expand prod_alpha prod_j prod_{i>=0} (1 - q^(i+j) X^alpha)^(t_j) using
  // prod_{i>=0} (1 - q^(i+j) u) = sum_n (-1)^n q^(n(n-1)/2 + jn) u^n / (q;q)_n.
  for (const Quiver& quiver : {kronecker, jordan, a2}) {
    const DimVector bound = quiver.vertex_count() == 1 ? DimVector{4} : DimVector{2, 2};
    const Box box(bound);
    const MSeries hua = hua_series(quiver, box);
    MSeries product = MSeries::one(box);
    for (const auto& [alpha, poly] : kac_a_polynomials(quiver, box)) {
      for (int j = 0; j <= poly.degree(); ++j) {
        const long t = poly.coefficient(j).get_si();
        if (t == 0) continue;
        MSeries factor(box);
        IntPoly qpoch(1);
        for (int n = 0;; ++n) {
          const DimVector v = alpha * n;
          if (!box.contains(v)) break;
          if (n > 0) qpoch *= IntPoly(1) - IntPoly::monomial(1, n);
          factor.set(v, RationalFunction(IntPoly::monomial(n % 2 == 0 ? 1 : -1, n * (n - 1) / 2 + j * n), qpoch));
        }
        const MSeries step = t > 0 ? factor : series_inverse(factor);
        for (long r = 0; r < (t > 0 ? t : -t); ++r) product = series_mul(product, step);
      }
    }
    CHECK(product == hua);
  }
}

TEST_CASE("loops are accepted") {
  const auto t = kac_a_polynomials(Quiver(1, {{0, 0}, {0, 0}}), Box(DimVector{2}));
  CHECK(t.at(DimVector{1}) == q * q);
  CHECK(t.at(DimVector{2}) == IntPoly{0, 0, 0, 1, 0, 1});
}
