#include <doctest.h>

#include <cstdlib>
#include <set>

#include "printing.hpp"
#include "quiverkac/errors.hpp"
#include "quiverkac/weyl.hpp"

using namespace quiverkac;

namespace {

const Quiver point(1);
const Quiver a2(2, {{0, 1}});
const Quiver a3(3, {{0, 1}, {1, 2}});
const Quiver kronecker(2, {{0, 1}, {0, 1}});
const Quiver triangle(3, {{0, 1}, {1, 2}, {2, 0}});

// Positive real roots: closure of the simple roots under s_i(b) = b - (C b)_i e_i,
// kept while positive and inside the bound.
std::set<DimVector> real_roots(const Quiver& q, const DimVector& bound) {
  const auto c = cartan_matrix(q);
  const std::size_t n = q.vertex_count();
  std::set<DimVector> seen;
  std::vector<DimVector> todo;
  for (std::size_t i = 0; i < n; ++i) todo.push_back(DimVector::unit(n, i));
  while (!todo.empty()) {
    const DimVector b = todo.back();
    todo.pop_back();
    if (!b.fits_in(bound) || !seen.insert(b).second) continue;
    for (std::size_t i = 0; i < n; ++i) {
      long pair = 0;
      for (std::size_t j = 0; j < n; ++j) pair += static_cast<long>(c[i][j]) * b[j];
      std::vector<int> next(b.begin(), b.end());
      next[i] -= static_cast<int>(pair);
      if (next[i] < 0) continue;
      bool zero = true;
      for (int x : next) zero = zero && x == 0;
      if (!zero) todo.emplace_back(next);
    }
  }
  return seen;
}

// Weyl dimension formula for sl_{n+1}: prod_{i<=j} (sum_{k=i..j} (w_k + 1)) / (j - i + 1).
long type_a_dimension(const DimVector& w) {
  long num = 1;
  long den = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    long s = 0;
    for (std::size_t j = i; j < w.size(); ++j) {
      s += w[j] + 1;
      num *= s;
      den *= static_cast<long>(j - i + 1);
    }
  }
  return num / den;
}

}  // namespace

TEST_CASE("reflections") {
  const auto c = cartan_matrix(a2);
  const WeylState s = WeylState::initial(DimVector{1, 0});
  CHECK(s.pairings == std::vector<long>{2, 1});
  const WeylState r = s.reflect(0, c);
  CHECK(r.offset == DimVector{2, 0});
  CHECK(r.pairings == std::vector<long>{-2, 3});
  CHECK(r.sign == -1);
}

TEST_CASE("orbit sum examples") {
  const MSeries s = weyl_orbit_sum(point, DimVector{0}, Box(DimVector{2}));
  CHECK(s[DimVector{0}] == RationalFunction(1));
  CHECK(s[DimVector{1}] == RationalFunction(-1));
  CHECK(s[DimVector{2}] == RationalFunction(0));

  const MSeries t = weyl_orbit_sum(a2, DimVector{0, 0}, Box(DimVector{2, 2}));
  const std::map<DimVector, int> expected = {{DimVector{0, 0}, 1},  {DimVector{1, 0}, -1}, {DimVector{0, 1}, -1},
                                             {DimVector{1, 2}, 1},  {DimVector{2, 1}, 1},  {DimVector{2, 2}, -1}};
  const Box box22(DimVector{2, 2});
  for (const auto& v : box22.points()) {
    const auto it = expected.find(v);
    CHECK(t[v] == RationalFunction(it == expected.end() ? 0 : it->second));
  }
  CHECK_THROWS_AS(weyl_orbit_sum(Quiver(1, {{0, 0}}), DimVector{0}, Box(DimVector{2})), LoopNotAllowed);
}

TEST_CASE("finite Weyl groups are enumerated completely") {
  CHECK(weyl_orbit(a2, DimVector{0, 0}, Box(DimVector{8, 8})).size() == 6);
  CHECK(weyl_orbit(a2, DimVector{1, 2}, Box(DimVector{12, 12})).size() == 6);
  CHECK(weyl_orbit(a3, DimVector{0, 0, 0}, Box(DimVector{8, 8, 8})).size() == 24);
  CHECK(weyl_orbit(point, DimVector{3}, Box(DimVector{20})).size() == 2);
}

TEST_CASE("orbit sums have coefficients in {-1, 0, 1}") {
  const std::vector<std::pair<Quiver, DimVector>> cases = {
      {kronecker, DimVector{6, 6}}, {Quiver(2, {{0, 1}, {0, 1}, {0, 1}}), DimVector{6, 6}}, {triangle, DimVector{4, 4, 4}}};
  for (const auto& [q, bound] : cases) {
    for (int w0 : {0, 1, 2}) {
      DimVector w(q.vertex_count());
      w[0] = w0;
      const Box box(bound);
      const MSeries s = weyl_orbit_sum(q, w, box);
      for (const auto& v : box.points()) {
        const Rational c = to_constant(s[v]);
        CHECK(c.get_den() == 1);
        CHECK(abs(c) <= 1);
      }
    }
  }
}

TEST_CASE("pruning does not change coefficients inside the region") {
  for (const Quiver& q : {kronecker, triangle, Quiver(2, {{0, 1}, {0, 1}, {0, 1}})}) {
    const std::size_t n = q.vertex_count();
    const DimVector small(std::vector<int>(n, 3));
    const DimVector large(std::vector<int>(n, 7));
    DimVector w(n);
    w[n - 1] = 1;
    const MSeries a = weyl_orbit_sum(q, w, Box(small));
    const MSeries b = weyl_orbit_sum(q, w, Box(large));
    const Box region(small);
    for (const auto& v : region.points()) CHECK(a[v] == b[v]);
  }
}

TEST_CASE("root multiplicity examples") {
  const auto m = root_multiplicities(a2, Box(DimVector{2, 2}));
  CHECK(m.at(DimVector{1, 0}) == 1);
  CHECK(m.at(DimVector{0, 1}) == 1);
  CHECK(m.at(DimVector{1, 1}) == 1);
  CHECK(m.at(DimVector{2, 0}) == 0);
  CHECK(m.at(DimVector{2, 1}) == 0);
  CHECK(m.at(DimVector{2, 2}) == 0);

  const auto k = root_multiplicities(kronecker, Box(DimVector{2, 2}));
  for (const DimVector v : {DimVector{1, 0}, DimVector{0, 1}, DimVector{1, 1}, DimVector{2, 1}, DimVector{2, 2}}) {
    CHECK(k.at(v) == 1);
  }
  const auto s = root_multiplicities(point, Box(DimVector{3}));
  CHECK(s.at(DimVector{1}) == 1);
  CHECK(s.at(DimVector{2}) == 0);
  CHECK(s.at(DimVector{3}) == 0);
}

TEST_CASE("finite type multiplicities are the root system") {
  for (const Quiver& q : {a2, a3}) {
    const DimVector bound(std::vector<int>(q.vertex_count(), 3));
    const auto roots = real_roots(q, bound);
    CHECK(roots.size() == (q.vertex_count() == 2 ? 3u : 6u));
    for (const auto& [alpha, mult] : root_multiplicities(q, Box(bound))) {
      if (alpha.is_zero()) continue;
      CHECK(mult == (roots.contains(alpha) ? 1 : 0));
    }
  }
}

TEST_CASE("affine multiplicities") {
  // Real roots have multiplicity 1; imaginary roots k*delta have the rank of the
  // underlying finite type (1 for the Kronecker quiver, 2 for the triangle).
  const auto k = root_multiplicities(kronecker, Box(DimVector{5, 5}));
  const auto kr = real_roots(kronecker, DimVector{5, 5});
  for (const auto& [alpha, mult] : k) {
    if (alpha.is_zero()) continue;
    const int expected = kr.contains(alpha) ? 1 : (alpha[0] == alpha[1] ? 1 : 0);
    CAPTURE(alpha);
    CHECK(mult == expected);
  }
  const auto t = root_multiplicities(triangle, Box(DimVector{3, 3, 3}));
  const auto tr = real_roots(triangle, DimVector{3, 3, 3});
  for (const auto& [alpha, mult] : t) {
    if (alpha.is_zero()) continue;
    const bool imaginary = alpha[0] == alpha[1] && alpha[1] == alpha[2];
    CAPTURE(alpha);
    CHECK(mult == (tr.contains(alpha) ? 1 : (imaginary ? 2 : 0)));
  }
}

TEST_CASE("character multiplicity examples") {
  const auto w2 = character_multiplicities(point, DimVector{2}, Box(DimVector{3}));
  CHECK(w2.at(DimVector{0}) == 1);
  CHECK(w2.at(DimVector{1}) == 1);
  CHECK(w2.at(DimVector{2}) == 1);
  CHECK(w2.at(DimVector{3}) == 0);
  const auto w1 = character_multiplicities(point, DimVector{1}, Box(DimVector{2}));
  CHECK(w1.at(DimVector{0}) == 1);
  CHECK(w1.at(DimVector{1}) == 1);
  CHECK(w1.at(DimVector{2}) == 0);
  for (int w = 0; w <= 5; ++w) {
    const auto t = character_multiplicities(point, DimVector{w}, Box(DimVector{w}));
    for (int a = 0; a <= w; ++a) CHECK(t.at(DimVector{a}) == t.at(DimVector{w - a}));
  }
}

TEST_CASE("type A characters have the Weyl dimension") {
  for (const DimVector w : {DimVector{1, 0}, DimVector{1, 1}, DimVector{2, 1}, DimVector{3, 0}, DimVector{2, 2}}) {
    const int s = w.total();
    const auto t = character_multiplicities(a2, w, Box(DimVector{2 * s, 2 * s}));
    long total = 0;
    for (const auto& [alpha, mult] : t) {
      CHECK(mult >= 0);
      total += mult;
    }
    CAPTURE(w);
    CHECK(total == type_a_dimension(w));
  }
  for (const DimVector w : {DimVector{1, 0, 0}, DimVector{0, 1, 0}, DimVector{1, 0, 1}, DimVector{1, 1, 0}}) {
    const int s = 2 * w.total();
    const auto t = character_multiplicities(a3, w, Box(DimVector{s, s, s}));
    long total = 0;
    for (const auto& [alpha, mult] : t) total += mult;
    CAPTURE(w);
    CHECK(total == type_a_dimension(w));
  }
  // adjoint representation of sl_3: the zero weight has multiplicity 2
  CHECK(character_multiplicities(a2, DimVector{1, 1}, Box(DimVector{2, 2})).at(DimVector{1, 1}) == 2);
}

TEST_CASE("denominator product reproduces the orbit sum") {
  for (const Quiver& q : {a2, kronecker, triangle}) {
    const DimVector bound(std::vector<int>(q.vertex_count(), q.vertex_count() == 3 ? 2 : 4));
    const Box box(bound);
    const DimVector zero(q.vertex_count());
    CHECK(denominator_product(root_multiplicities(q, box), box) == weyl_orbit_sum(q, zero, box));
  }
}
