#include "quiverkac/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quiverkac/errors.hpp"

namespace quiverkac {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!out.empty() && out.back().first == *it) {
      ++out.back().second;
    } else {
      out.emplace_back(*it, 1);
    }
  }
  return out;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int k = 0; k < p; ++k) ++c[static_cast<std::size_t>(k)];
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

DimVector MultiPartition::sizes() const {
  DimVector v(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) v[i] = parts_[i].size();
  return v;
}

long pairing(const Partition& lambda, const Partition& mu) {
  const auto& a = lambda.parts();
  const auto& b = mu.parts();
  if (a.empty() || b.empty()) return 0;
  // lambda'_k = #{parts >= k}
  long total = 0;
  const int top = std::min(a.front(), b.front());
  std::size_t ia = a.size();
  std::size_t ib = b.size();
  for (int k = 1; k <= top; ++k) {
    while (ia > 0 && a[ia - 1] < k) --ia;
    while (ib > 0 && b[ib - 1] < k) --ib;
    total += static_cast<long>(ia) * static_cast<long>(ib);
  }
  return total;
}

RationalFunction centralizer_order(const Partition& lambda) {
  // q^<l,l> prod (1 - q^-j) = q^(<l,l> - sum j) prod (q^j - 1)
  long shift = pairing(lambda, lambda);
  IntPoly prod(1);
  for (auto [part, m] : lambda.multiplicities()) {
    for (int j = 1; j <= m; ++j) {
      shift -= j;
      prod *= IntPoly::monomial(1, j) - IntPoly(1);
    }
  }
  return RationalFunction(prod) * RationalFunction::q_power(static_cast<int>(shift));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw UsageError("cannot partition a negative integer");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Standard successor in reverse-lexicographic order.
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    // strip trailing ones
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    int k = a.back() - 1;
    a.back() = k;
    int rest = ones + 1;
    while (rest >= k) {
      a.push_back(k);
      rest -= k;
    }
    if (rest > 0) a.push_back(rest);
  }
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = enumerate_partitions(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

long partition_count(int n) {
  if (n < 0) return 0;
  // Euler's pentagonal recurrence.
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) acc += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

MultiPartitionStream::MultiPartitionStream(Box region) : region_(std::move(region)) {
  for (int b : region_.bound()) lists_.push_back(partitions_up_to(b));
  idx_.assign(lists_.size(), 0);
}

bool MultiPartitionStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    current_total_ = 0;
    return true;
  }
  // Odometer; vertex 0 moves fastest. Any index whose partition would push
  // the total past the cap is rolled over immediately.
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    const auto& list = lists_[i];
    current_total_ -= list[idx_[i]].size();
    ++idx_[i];
    if (idx_[i] < list.size() && current_total_ + list[idx_[i]].size() <= region_.max_total()) {
      current_total_ += list[idx_[i]].size();
      return true;
    }
    idx_[i] = 0;
  }
  done_ = true;
  return false;
}

bool MultiPartitionStream::next_indices(std::vector<std::size_t>& out) {
  if (!advance()) return false;
  out = idx_;
  return true;
}

std::optional<MultiPartition> MultiPartitionStream::next() {
  if (!advance()) return std::nullopt;
  std::vector<Partition> parts;
  parts.reserve(idx_.size());
  for (std::size_t i = 0; i < idx_.size(); ++i) parts.push_back(lists_[i][idx_[i]]);
  return MultiPartition(std::move(parts));
}

long MultiPartitionStream::box_count(const DimVector& bound) {
  long total = 1;
  for (int b : bound) {
    long s = 0;
    for (int k = 0; k <= b; ++k) s += partition_count(k);
    total *= s;
  }
  return total;
}

std::vector<MultiPartition> enumerate_multipartitions(const Box& region) {
  std::vector<MultiPartition> out;
  MultiPartitionStream stream(region);
  while (auto mp = stream.next()) out.push_back(std::move(*mp));
  return out;
}

}  // namespace quiverkac
