#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quiverkac/dimvector.hpp"

namespace quiverkac {

struct Edge {
  std::size_t source;  // 0-based
  std::size_t target;  // 0-based
  bool is_loop() const { return source == target; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite directed multigraph; vertices are 0..n-1 internally and 1..n in
// every external representation.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::size_t vertices, std::vector<Edge> edges = {});

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Edges between i and j in either direction (i != j).
  int edges_between(std::size_t i, std::size_t j) const;
  int loops_at(std::size_t i) const;
  bool has_loops() const;
  // Throws LoopNotAllowed naming the caller.
  void require_loop_free(const std::string& what) const;

  Quiver reversed() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Text format:
//   vertices <n>
//   edge <i> <j>      (1-based; repeat for multiplicity; i == j is a loop)
// with '#' comments and blank lines ignored.
Quiver parse_quiver(const std::string& text);
Quiver load_quiver(const std::string& path);
std::string serialize_quiver(const Quiver& q);

// d_{v,w} = sum_e v_s(e) v_t(e) + sum_i v_i (w_i - v_i); half the dimension
// of the quiver variety (negative values mean the variety is empty).
long half_dimension(const Quiver& q, const DimVector& v, const DimVector& w);

// C_ij = 2 delta_ij - b_ij, for loop-free quivers.
std::vector<std::vector<int>> cartan_matrix(const Quiver& q);

// Throws LengthMismatch unless v has one entry per vertex.
void check_length(const Quiver& q, const DimVector& v, const std::string& name);

}  // namespace quiverkac
