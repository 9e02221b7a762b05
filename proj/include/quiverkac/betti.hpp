#pragma once

#include <map>
#include <string>
#include <vector>

#include "quiverkac/hua.hpp"
#include "quiverkac/weyl.hpp"

namespace quiverkac {

struct PoincareEntry {
  long half_dimension = 0;  // d_{v,w}
  IntPoly poincare;         // sum_i b_{2i} q^(d - i); zero for an empty variety
};

struct PoincareTable {
  DimVector w;
  std::map<DimVector, PoincareEntry> entries;

  const PoincareEntry& at(const DimVector& v) const;
};

// P_v(q) for every v in the region, from the ratio
// framed_numerator_series(w) / hua_series. Throws InvariantError if a
// coefficient is not a polynomial with nonnegative integer coefficients of
// degree <= d_{v,w}.
PoincareTable poincare_series(const Quiver& q, const DimVector& w, const Box& region, int jobs = 1);

// [b_0, b_2, ..., b_2d]; b_2i is the coefficient of q^(d-i). Empty when
// d < 0. Throws UsageError when v is not in the table.
std::vector<Integer> betti_numbers(const PoincareTable& table, const DimVector& v);

// |V_1(v,w)(F_p)| / |G_v(F_p)| predicted by the Poincare polynomial:
// p^d * P_v(p). The grand generating function carries |g_v| / |V_{v,w}|,
// and dim V_{v,w} - dim g_v = d_{v,w}, which is where the p^d comes from.
Rational expected_orbit_count(const PoincareEntry& entry, long p);

struct ChainRow {
  DimVector v;
  Integer top_betti;         // P_v(0)
  std::int64_t multiplicity; // dim L(L_w)_{L_w - v}
  bool pass;
};

struct ChainReport {
  DimVector w;
  std::vector<ChainRow> rows;
  bool all_pass() const;
};

// P_v(0) against the weight multiplicity for every v in the region.
ChainReport top_betti_equals_weight_multiplicity(const Quiver& q, const DimVector& w, const Box& region,
                                                 int jobs = 1);

}  // namespace quiverkac
