#pragma once

#include <map>
#include <vector>

#include "quiverkac/mseries.hpp"
#include "quiverkac/partitions.hpp"
#include "quiverkac/quiver.hpp"

namespace quiverkac {

// Weight of one multipartition in the nilpotent generating sums:
//
//   prod_e q^<l^s(e), l^t(e)> * prod_i q^(w_i * len(l^i))
//   ---------------------------------------------------------
//   prod_i q^<l^i,l^i> prod_k prod_{j <= m_k(l^i)} (1 - q^-j)
//
// kept factored as q^q_exponent / prod_d Phi_d(q)^cyclotomic[d], which is how
// the sums combine terms without a gcd per addition.
struct HuaTerm {
  long q_exponent = 0;
  // cyclotomic[d] is the multiplicity of Phi_d in the denominator; index 0 unused.
  std::vector<int> cyclotomic;

  RationalFunction weight() const;
};

// Term of a single multipartition; w may be empty for the unframed sum.
HuaTerm hua_term(const Quiver& q, const MultiPartition& lambda, const DimVector& w = {});

// Sum over multipartitions inside the region of HuaTerm * X^|lambda| (no framing).
MSeries hua_series(const Quiver& q, const Box& region, int jobs = 1);

// The same sum with the framing factor prod_i q^(w_i * len(l^i)); equals
// hua_series when w = 0.
MSeries framed_numerator_series(const Quiver& q, const DimVector& w, const Box& region, int jobs = 1);

// A_Gamma(alpha, q) for every 0 < alpha in the region.
using APolyTable = std::map<DimVector, IntPoly>;

// Extracts the A-polynomials from the logarithm of hua_series. Writing
// L = log(hua_series), expanding log prod (1 - q^(i+j) X^a)^(t_j) gives
//
//   L_b = - sum_{k >= 1, b = k a} A_a(q^k) / (k (1 - q^k)),
//
// which is solved for A_b in order of increasing |b|.
APolyTable kac_a_polynomials(const Quiver& q, const Box& region, int jobs = 1);

// Same extraction from an already computed hua_series.
APolyTable a_polynomials_from_series(const MSeries& hua);

// A_Gamma(alpha, 0) for each entry.
std::map<DimVector, Integer> constant_terms(const APolyTable& table);

}  // namespace quiverkac
