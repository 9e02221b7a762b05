#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "quiverkac/mseries.hpp"
#include "quiverkac/quiver.hpp"

namespace quiverkac {

// One element w(L + rho) of the Weyl orbit of L + rho, L = sum_i w_i Lambda_i.
//   current weight = (L + rho) - sum_i offset_i alpha_i
//   pairings_i     = <h_i, current weight>
//   sign           = det(w)
struct WeylState {
  DimVector offset;
  std::vector<long> pairings;
  int sign = 1;

  static WeylState initial(const DimVector& w);
  // r_i with the integer Cartan matrix: offset_i += c_i, c_j -= c_i C_ji.
  WeylState reflect(std::size_t i, const std::vector<std::vector<int>>& cartan) const;
};

// Map alpha -> multiplicity.
using MultiplicityTable = std::map<DimVector, std::int64_t>;

// sum over the orbit elements inside the region of det(w) X^offset.
//
// Breadth-first from the initial state, applying r_i only when c_i > 0. Such
// a step raises offset_i by c_i and leaves the other coordinates alone, so
// offsets only grow along the search and anything that leaves the region is
// gone for good; pruning it loses nothing. Every orbit element is reached
// this way because each one has a reduced word whose prefixes all have
// c_i > 0 at the next letter. Offsets are distinct on the orbit of a regular
// weight, so the offset alone is the dedup key.
MSeries weyl_orbit_sum(const Quiver& q, const DimVector& w, const Box& region);

// Same traversal returning the visited states (diagnostics and tests).
std::vector<WeylState> weyl_orbit(const Quiver& q, const DimVector& w, const Box& region);

// m_alpha from sum det(w) X^(rho - w rho) = prod (1 - X^alpha)^(m_alpha).
MultiplicityTable root_multiplicities(const Quiver& q, const Box& region);

// dim L(L_w)_{L_w - alpha} = [X^alpha] orbit_sum(w) / orbit_sum(0).
MultiplicityTable character_multiplicities(const Quiver& q, const DimVector& w, const Box& region);

// prod_alpha (1 - X^alpha)^(m_alpha) expanded on the region.
MSeries denominator_product(const MultiplicityTable& mult, const Box& region);

}  // namespace quiverkac
