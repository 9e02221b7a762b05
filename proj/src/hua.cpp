#include "quiverkac/hua.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "quiverkac/errors.hpp"

namespace quiverkac {

namespace {

// Denominator prod_k prod_{j <= m_k} (q^j - 1) as Phi_d multiplicities.
void add_centralizer_denominator(const Partition& p, std::vector<int>& cyc) {
  for (auto [part, m] : p.multiplicities()) {
    for (int j = 1; j <= m; ++j) {
      if (cyc.size() <= static_cast<std::size_t>(j)) cyc.resize(static_cast<std::size_t>(j) + 1, 0);
      for (int d = 1; d <= j; ++d) {
        if (j % d == 0) ++cyc[static_cast<std::size_t>(d)];
      }
    }
  }
}

// sum_k sum_{j <= m_k} j  - <p,p>: the q-power left after clearing 1 - q^-j.
long centralizer_shift(const Partition& p) {
  long s = -pairing(p, p);
  for (auto [part, m] : p.multiplicities()) s += static_cast<long>(m) * (m + 1) / 2;
  return s;
}

struct VertexData {
  long shift;
  int length;
  std::vector<int> cyclotomic;
};

using TermKey = std::pair<std::vector<int>, long>;
using TermBucket = std::map<TermKey, long>;

class HuaAccumulator {
 public:
  HuaAccumulator(const Quiver& q, const DimVector& w, const Box& region) : q_(q), w_(w), region_(region) {
    int top = 0;
    for (int b : region.bound()) top = std::max(top, b);
    all_ = partitions_up_to(top);
    pair_.assign(all_.size(), std::vector<long>(all_.size(), 0));
    for (std::size_t a = 0; a < all_.size(); ++a) {
      for (std::size_t b = a; b < all_.size(); ++b) pair_[a][b] = pair_[b][a] = pairing(all_[a], all_[b]);
    }
    for (const auto& p : all_) {
      VertexData vd{centralizer_shift(p), p.length(), {}};
      add_centralizer_denominator(p, vd.cyclotomic);
      data_.push_back(std::move(vd));
    }
  }

  // Buckets indexed by dense box index; worker `part` of `parts` takes every
  // parts-th multipartition of the stream.
  std::vector<TermBucket> collect(int part, int parts) const {
    std::vector<TermBucket> buckets(region_.box_volume());
    MultiPartitionStream stream(region_);
    std::vector<std::size_t> idx;
    const std::size_t n = q_.vertex_count();
    DimVector size(n);
    long counter = 0;
    while (stream.next_indices(idx)) {
      if (counter++ % parts != part) continue;
      long e = 0;
      std::vector<int> cyc;
      for (std::size_t i = 0; i < n; ++i) {
        // Per-vertex lists are prefixes of all_, so indices agree.
        const VertexData& vd = data_[idx[i]];
        size[i] = all_[idx[i]].size();
        e += vd.shift;
        if (!w_.entries().empty()) e += static_cast<long>(w_[i]) * vd.length;
        if (cyc.size() < vd.cyclotomic.size()) cyc.resize(vd.cyclotomic.size(), 0);
        for (std::size_t d = 0; d < vd.cyclotomic.size(); ++d) cyc[d] += vd.cyclotomic[d];
      }
      for (const auto& edge : q_.edges()) e += pair_[idx[edge.source]][idx[edge.target]];
      ++buckets[region_.index(size)][{std::move(cyc), e}];
    }
    return buckets;
  }

 private:
  const Quiver& q_;
  const DimVector& w_;
  const Box& region_;
  std::vector<Partition> all_;
  std::vector<std::vector<long>> pair_;
  std::vector<VertexData> data_;
};

IntPoly cyclotomic_product(const std::vector<int>& mult) {
  IntPoly p(1);
  for (std::size_t d = 1; d < mult.size(); ++d) {
    for (int k = 0; k < mult[d]; ++k) p *= cyclotomic(static_cast<int>(d));
  }
  return p;
}

// Sums the bucket over the least common cyclotomic denominator.
RationalFunction combine(const TermBucket& bucket) {
  if (bucket.empty()) return {};
  std::vector<int> lcm;
  long emin = bucket.begin()->first.second;
  for (const auto& [key, count] : bucket) {
    const auto& cyc = key.first;
    if (lcm.size() < cyc.size()) lcm.resize(cyc.size(), 0);
    for (std::size_t d = 0; d < cyc.size(); ++d) lcm[d] = std::max(lcm[d], cyc[d]);
    emin = std::min(emin, key.second);
  }
  IntPoly num;
  std::map<std::vector<int>, IntPoly> cofactors;
  for (const auto& [key, count] : bucket) {
    const auto& cyc = key.first;
    auto it = cofactors.find(cyc);
    if (it == cofactors.end()) {
      std::vector<int> missing = lcm;
      for (std::size_t d = 0; d < cyc.size(); ++d) missing[d] -= cyc[d];
      it = cofactors.emplace(cyc, cyclotomic_product(missing)).first;
    }
    num += (it->second * Integer(count)).shifted(static_cast<int>(key.second - emin));
  }
  IntPoly den = cyclotomic_product(lcm);
  RationalFunction r(std::move(num), std::move(den));
  return r * RationalFunction::q_power(static_cast<int>(emin));
}

MSeries nilpotent_sum(const Quiver& q, const DimVector& w, const Box& region, int jobs) {
  if (region.rank() != q.vertex_count()) throw LengthMismatch("bound length does not match the quiver");
  if (!w.entries().empty()) check_length(q, w, "w");
  jobs = std::max(1, jobs);
  HuaAccumulator acc(q, w, region);
  std::vector<std::vector<TermBucket>> parts(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    parts[0] = acc.collect(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (int k = 0; k < jobs; ++k) {
      workers.emplace_back([&, k] { parts[static_cast<std::size_t>(k)] = acc.collect(k, jobs); });
    }
  }
  MSeries out(region);
  for (const auto& v : region.points()) {
    TermBucket merged;
    for (const auto& p : parts) {
      for (const auto& [key, count] : p[region.index(v)]) merged[key] += count;
    }
    out.set(v, combine(merged));
  }
  return out;
}

}  // namespace

RationalFunction HuaTerm::weight() const {
  return RationalFunction(IntPoly(1), cyclotomic_product(cyclotomic)) * RationalFunction::q_power(static_cast<int>(q_exponent));
}

HuaTerm hua_term(const Quiver& q, const MultiPartition& lambda, const DimVector& w) {
  if (lambda.rank() != q.vertex_count()) throw LengthMismatch("multipartition rank does not match the quiver");
  if (!w.entries().empty()) check_length(q, w, "w");
  HuaTerm t;
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    t.q_exponent += centralizer_shift(lambda[i]);
    if (!w.entries().empty()) t.q_exponent += static_cast<long>(w[i]) * lambda[i].length();
    add_centralizer_denominator(lambda[i], t.cyclotomic);
  }
  for (const auto& e : q.edges()) t.q_exponent += pairing(lambda[e.source], lambda[e.target]);
  return t;
}

MSeries hua_series(const Quiver& q, const Box& region, int jobs) { return nilpotent_sum(q, {}, region, jobs); }

MSeries framed_numerator_series(const Quiver& q, const DimVector& w, const Box& region, int jobs) {
  check_length(q, w, "w");
  return nilpotent_sum(q, w, region, jobs);
}

APolyTable a_polynomials_from_series(const MSeries& hua) {
  const Box& region = hua.box();
  MSeries log = series_log(hua);
  APolyTable table;
  const IntPoly one_minus_q{1, -1};
  for (const auto& beta : region.points()) {
    if (beta.is_zero()) continue;
    RationalFunction acc = log[beta];
    const int g = beta.content();
    for (int k = 2; k <= g; ++k) {
      if (g % k != 0) continue;
      const IntPoly& a = table.at(beta.divided(k));
      if (a.is_zero()) continue;
      // A_a(q^k) / (k (1 - q^k))
      acc += RationalFunction(a.substitute_power(k), one_minus_q.substitute_power(k) * Integer(k));
    }
    table.emplace(beta, to_polynomial(-(acc * RationalFunction(one_minus_q))));
  }
  return table;
}

APolyTable kac_a_polynomials(const Quiver& q, const Box& region, int jobs) {
  return a_polynomials_from_series(hua_series(q, region, jobs));
}

std::map<DimVector, Integer> constant_terms(const APolyTable& table) {
  std::map<DimVector, Integer> out;
  for (const auto& [alpha, poly] : table) out.emplace(alpha, poly.coefficient(0));
  return out;
}

}  // namespace quiverkac
