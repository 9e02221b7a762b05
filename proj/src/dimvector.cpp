#include "quiverkac/dimvector.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quiverkac/errors.hpp"

namespace quiverkac {

DimVector::DimVector(std::initializer_list<int> entries) : v_(entries) {
  for (int x : v_) {
    if (x < 0) throw UsageError("dimension vector entries must be nonnegative");
  }
}

DimVector::DimVector(std::vector<int> entries) : v_(std::move(entries)) {
  for (int x : v_) {
    if (x < 0) throw UsageError("dimension vector entries must be nonnegative");
  }
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  DimVector e(n);
  e[i] = 1;
  return e;
}

int DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), 0); }

bool DimVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

bool DimVector::fits_in(const DimVector& bound) const {
  if (bound.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (v_[i] > bound.v_[i]) return false;
  }
  return true;
}

int DimVector::content() const {
  int g = 0;
  for (int x : v_) g = std::gcd(g, x);
  return g;
}

DimVector DimVector::operator+(const DimVector& o) const {
  if (o.size() != size()) throw LengthMismatch("dimension vector length mismatch");
  DimVector r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.v_[i] += o.v_[i];
  return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
  if (o.size() != size()) throw LengthMismatch("dimension vector length mismatch");
  DimVector r = *this;
  for (std::size_t i = 0; i < size(); ++i) {
    r.v_[i] -= o.v_[i];
    if (r.v_[i] < 0) throw UsageError("dimension vector difference is negative");
  }
  return r;
}

DimVector DimVector::operator*(int k) const {
  DimVector r = *this;
  for (auto& x : r.v_) x *= k;
  return r;
}

DimVector DimVector::divided(int k) const {
  DimVector r = *this;
  for (auto& x : r.v_) x /= k;
  return r;
}

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ")";
  return os.str();
}

DimVector parse_dimvector(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int x = 0;
    try {
      x = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad dimension vector entry '" + item + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size() || x < 0) throw UsageError("bad dimension vector entry '" + item + "'");
    out.push_back(x);
  }
  if (out.empty()) throw UsageError("empty dimension vector");
  return DimVector(std::move(out));
}

Box::Box(DimVector bound) : bound_(std::move(bound)), max_total_(bound_.total()) { build(); }

Box::Box(DimVector bound, int max_total) : bound_(std::move(bound)), max_total_(max_total) {
  if (max_total_ < 0) throw UsageError("negative total-degree cap");
  build();
}

void Box::build() {
  strides_.assign(bound_.size(), 1);
  volume_ = 1;
  for (std::size_t i = 0; i < bound_.size(); ++i) {
    strides_[i] = volume_;
    volume_ *= static_cast<std::size_t>(bound_[i]) + 1;
  }
  points_.clear();
  DimVector v(bound_.size());
  for (std::size_t flat = 0; flat < volume_; ++flat) {
    std::size_t rest = flat;
    for (std::size_t i = 0; i < bound_.size(); ++i) {
      v[i] = static_cast<int>(rest % (static_cast<std::size_t>(bound_[i]) + 1));
      rest /= static_cast<std::size_t>(bound_[i]) + 1;
    }
    if (v.total() <= max_total_) points_.push_back(v);
  }
  std::stable_sort(points_.begin(), points_.end(), [](const DimVector& a, const DimVector& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
}

bool Box::contains(const DimVector& v) const { return v.fits_in(bound_) && v.total() <= max_total_; }

std::size_t Box::index(const DimVector& v) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < v.size(); ++i) idx += strides_[i] * static_cast<std::size_t>(v[i]);
  return idx;
}

}  // namespace quiverkac
