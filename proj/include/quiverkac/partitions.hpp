#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "quiverkac/dimvector.hpp"
#include "quiverkac/ratfunc.hpp"

namespace quiverkac {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);
  // 1^n
  static Partition column(int n);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // m_k: number of parts equal to k.
  int multiplicity(int k) const;
  // Nonzero multiplicities as (part, count), ascending in part.
  std::vector<std::pair<int, int>> multiplicities() const;
  Partition conjugate() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// One partition per vertex.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> parts) : parts_(std::move(parts)) {}

  std::size_t rank() const { return parts_.size(); }
  const Partition& operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<Partition>& parts() const { return parts_; }
  // (|lambda^i|)_i
  DimVector sizes() const;

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<Partition> parts_;
};

// <lambda, mu> = sum_{i,j} min(i,j) m_i(lambda) m_j(mu), evaluated as the dot
// product of the conjugate partitions.
long pairing(const Partition& lambda, const Partition& mu);

// Order of the centralizer in GL_n(F_q) of a nilpotent matrix of Jordan type
// lambda: q^<lambda,lambda> prod_k prod_{j<=m_k} (1 - q^-j).
RationalFunction centralizer_order(const Partition& lambda);

// All partitions of n in reverse-lexicographic order: (4), (3,1), (2,2), ...
std::vector<Partition> enumerate_partitions(int n);

// All partitions of size <= n, grouped by size, reverse-lex within a size.
std::vector<Partition> partitions_up_to(int n);

// Number of partitions of n.
long partition_count(int n);

// Lazily walks every multipartition with sizes inside a truncation region.
// Vertex i ranges over partitions_up_to(bound_i); the cursor never holds
// more than the per-vertex lists and one index vector.
class MultiPartitionStream {
 public:
  explicit MultiPartitionStream(Box region);

  // Advances to the next multipartition; false once exhausted.
  std::optional<MultiPartition> next();

  // Index form for hot loops: per-vertex indices into vertex_partitions(i).
  bool next_indices(std::vector<std::size_t>& out);
  const std::vector<Partition>& vertex_partitions(std::size_t i) const { return lists_[i]; }
  const Box& region() const { return region_; }

  // Number of items the stream yields for a full box (no total cap):
  // prod_i sum_{k <= bound_i} p(k).
  static long box_count(const DimVector& bound);

 private:
  bool advance();
  Box region_;
  std::vector<std::vector<Partition>> lists_;
  std::vector<std::size_t> idx_;
  int current_total_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<MultiPartition> enumerate_multipartitions(const Box& region);

}  // namespace quiverkac
