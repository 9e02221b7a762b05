#include "quiverkac/weyl.hpp"

#include <deque>
#include <limits>

#include "quiverkac/errors.hpp"

namespace quiverkac {

WeylState WeylState::initial(const DimVector& w) {
  WeylState s;
  s.offset = DimVector(w.size());
  s.pairings.reserve(w.size());
  for (int x : w) s.pairings.push_back(static_cast<long>(x) + 1);
  return s;
}

WeylState WeylState::reflect(std::size_t i, const std::vector<std::vector<int>>& cartan) const {
  WeylState r = *this;
  const long c = pairings[i];
  r.offset[i] += static_cast<int>(c);
  for (std::size_t j = 0; j < pairings.size(); ++j) r.pairings[j] -= c * cartan[j][i];
  r.sign = -sign;
  return r;
}

std::vector<WeylState> weyl_orbit(const Quiver& q, const DimVector& w, const Box& region) {
  q.require_loop_free("the Weyl group action");
  check_length(q, w, "w");
  if (region.rank() != q.vertex_count()) throw LengthMismatch("bound length does not match the quiver");
  const auto cartan = cartan_matrix(q);
  std::map<DimVector, int> seen;
  std::vector<WeylState> out;
  std::deque<WeylState> frontier;
  WeylState start = WeylState::initial(w);
  seen.emplace(start.offset, start.sign);
  frontier.push_back(start);
  while (!frontier.empty()) {
    WeylState s = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < s.pairings.size(); ++i) {
      if (s.pairings[i] <= 0) continue;
      if (static_cast<long>(s.offset[i]) + s.pairings[i] > region.bound()[i]) continue;
      WeylState t = s.reflect(i, cartan);
      if (!region.contains(t.offset)) continue;
      auto [it, fresh] = seen.emplace(t.offset, t.sign);
      if (!fresh) {
        if (it->second != t.sign) {
          throw InvariantError("Weyl orbit offsets collide with opposite signs at " + t.offset.to_string());
        }
        continue;
      }
      frontier.push_back(std::move(t));
    }
    out.push_back(std::move(s));
  }
  return out;
}

MSeries weyl_orbit_sum(const Quiver& q, const DimVector& w, const Box& region) {
  MSeries out(region);
  for (const auto& s : weyl_orbit(q, w, region)) out.set(s.offset, RationalFunction(static_cast<long>(s.sign)));
  return out;
}

namespace {

std::int64_t to_int64(const Rational& r, const DimVector& alpha, bool require_nonnegative) {
  if (r.get_den() != 1) {
    if (require_nonnegative) {
      throw NegativeOrNonIntegerMultiplicity("non-integer multiplicity " + r.get_str() + " at " + alpha.to_string());
    }
    throw NonIntegerMultiplicity("non-integer multiplicity " + r.get_str() + " at " + alpha.to_string());
  }
  if (require_nonnegative && r < 0) {
    throw NegativeOrNonIntegerMultiplicity("negative multiplicity " + r.get_str() + " at " + alpha.to_string());
  }
  if (!r.get_num().fits_slong_p()) throw InvariantError("multiplicity overflows 64 bits at " + alpha.to_string());
  return r.get_num().get_si();
}

}  // namespace

MultiplicityTable root_multiplicities(const Quiver& q, const Box& region) {
  MSeries log = series_log(weyl_orbit_sum(q, DimVector(q.vertex_count()), region));
  // log prod (1 - X^a)^(m_a) = - sum_a m_a sum_k X^(k a) / k, so
  // m_b = -L_b - sum_{k >= 2, b = k a} m_a / k.
  MultiplicityTable table;
  for (const auto& beta : region.points()) {
    if (beta.is_zero()) continue;
    Rational m = -to_constant(log[beta]);
    const int g = beta.content();
    for (int k = 2; k <= g; ++k) {
      if (g % k != 0) continue;
      m -= Rational(table.at(beta.divided(k)), k);
    }
    m.canonicalize();
    table.emplace(beta, to_int64(m, beta, false));
  }
  return table;
}

MultiplicityTable character_multiplicities(const Quiver& q, const DimVector& w, const Box& region) {
  MSeries num = weyl_orbit_sum(q, w, region);
  MSeries den = weyl_orbit_sum(q, DimVector(q.vertex_count()), region);
  MSeries ratio = series_mul(num, series_inverse(den));
  MultiplicityTable table;
  for (const auto& alpha : region.points()) table.emplace(alpha, to_int64(to_constant(ratio[alpha]), alpha, true));
  return table;
}

MSeries denominator_product(const MultiplicityTable& mult, const Box& region) {
  MSeries out = MSeries::one(region);
  const DimVector zero(region.rank());
  for (const auto& [alpha, m] : mult) {
    if (m == 0 || alpha.is_zero() || !region.contains(alpha)) continue;
    MSeries factor = MSeries::one(region) - MSeries::monomial(region, alpha);
    if (m < 0) factor = series_inverse(factor);
    for (std::int64_t k = 0; k < (m < 0 ? -m : m); ++k) out = series_mul(out, factor);
  }
  return out;
}

}  // namespace quiverkac
