#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace quiverkac {

// Element of N^I: one nonnegative integer per vertex.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : v_(n, 0) {}
  DimVector(std::initializer_list<int> entries);
  explicit DimVector(std::vector<int> entries);

  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }
  std::span<const int> entries() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  int total() const;
  bool is_zero() const;
  // Componentwise <=.
  bool fits_in(const DimVector& bound) const;
  // gcd of the entries (0 for the zero vector).
  int content() const;

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  DimVector operator*(int k) const;
  // Componentwise division; k must divide every entry.
  DimVector divided(int k) const;

  // "(1,2,0)"
  std::string to_string() const;

  friend auto operator<=>(const DimVector&, const DimVector&) = default;
  friend bool operator==(const DimVector&, const DimVector&) = default;

 private:
  std::vector<int> v_;
};

// Comma separated list "1,2,1"; throws UsageError on bad input.
DimVector parse_dimvector(const std::string& csv);

// Downward closed truncation region: all v with v <= bound componentwise and
// |v| <= max_total. The default max_total keeps the full box.
class Box {
 public:
  Box() = default;
  Box(DimVector bound);  // NOLINT(google-explicit-constructor)
  Box(DimVector bound, int max_total);

  const DimVector& bound() const { return bound_; }
  int max_total() const { return max_total_; }
  std::size_t rank() const { return bound_.size(); }

  bool contains(const DimVector& v) const;
  // Dense index of v in the enclosing box (mixed radix).
  std::size_t index(const DimVector& v) const;
  std::size_t box_volume() const { return volume_; }
  // Every point of the region, ordered by total degree then lexicographically.
  const std::vector<DimVector>& points() const { return points_; }

  friend bool operator==(const Box& a, const Box& b) {
    return a.bound_ == b.bound_ && a.max_total_ == b.max_total_;
  }

 private:
  void build();
  DimVector bound_;
  int max_total_ = 0;
  std::size_t volume_ = 1;
  std::vector<std::size_t> strides_;
  std::vector<DimVector> points_;
};

}  // namespace quiverkac
