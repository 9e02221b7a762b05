#include "quiverkac/betti.hpp"

#include "quiverkac/errors.hpp"

namespace quiverkac {

const PoincareEntry& PoincareTable::at(const DimVector& v) const {
  auto it = entries.find(v);
  if (it == entries.end()) throw UsageError("dimension vector " + v.to_string() + " is not in the table");
  return it->second;
}

PoincareTable poincare_series(const Quiver& q, const DimVector& w, const Box& region, int jobs) {
  q.require_loop_free("the Betti number formula");
  check_length(q, w, "w");
  MSeries ratio = series_mul(framed_numerator_series(q, w, region, jobs), series_inverse(hua_series(q, region, jobs)));
  PoincareTable table;
  table.w = w;
  for (const auto& v : region.points()) {
    PoincareEntry e;
    e.half_dimension = half_dimension(q, v, w);
    e.poincare = to_polynomial(ratio[v]);
    if (!e.poincare.is_zero()) {
      if (e.poincare.degree() > e.half_dimension) {
        throw InvariantError("Poincare polynomial at " + v.to_string() + " exceeds degree d=" +
                             std::to_string(e.half_dimension) + ": " + e.poincare.to_string());
      }
      for (const auto& c : e.poincare.coefficients()) {
        if (c < 0) throw InvariantError("negative Betti number at " + v.to_string() + ": " + e.poincare.to_string());
      }
    }
    table.entries.emplace(v, std::move(e));
  }
  return table;
}

std::vector<Integer> betti_numbers(const PoincareTable& table, const DimVector& v) {
  const PoincareEntry& e = table.at(v);
  std::vector<Integer> out;
  if (e.half_dimension < 0) return out;
  const long d = e.half_dimension;
  if (e.poincare.degree() > d) throw InvariantError("Poincare polynomial degree exceeds d");
  for (long i = 0; i <= d; ++i) out.push_back(e.poincare.coefficient(static_cast<int>(d - i)));
  return out;
}

Rational expected_orbit_count(const PoincareEntry& entry, long p) {
  Rational value = entry.poincare.evaluate(Rational(p));
  if (value == 0) return 0;
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(entry.half_dimension < 0 ? -entry.half_dimension : entry.half_dimension));
  Rational r = entry.half_dimension >= 0 ? Rational(value * pd) : Rational(value / pd);
  r.canonicalize();
  return r;
}

bool ChainReport::all_pass() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return true;
}

ChainReport top_betti_equals_weight_multiplicity(const Quiver& q, const DimVector& w, const Box& region, int jobs) {
  PoincareTable table = poincare_series(q, w, region, jobs);
  MultiplicityTable mult = character_multiplicities(q, w, region);
  ChainReport report;
  report.w = w;
  for (const auto& v : region.points()) {
    ChainRow row;
    row.v = v;
    row.top_betti = table.at(v).poincare.coefficient(0);
    row.multiplicity = mult.at(v);
    row.pass = row.top_betti == Integer(static_cast<long>(row.multiplicity));
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace quiverkac
