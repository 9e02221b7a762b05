#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quiverkac/betti.hpp"
#include "quiverkac/partitions.hpp"
#include "quiverkac/quiver.hpp"

namespace quiverkac {

inline constexpr std::uint64_t kDefaultGuard = 100'000'000;

bool is_prime(long p);

// Element of F_p, p prime.
class FpScalar {
 public:
  FpScalar(std::uint32_t residue, std::uint32_t p);
  std::uint32_t value() const { return r_; }
  std::uint32_t prime() const { return p_; }
  FpScalar operator+(FpScalar o) const { return {(r_ + o.r_) % p_, p_}; }
  FpScalar operator-(FpScalar o) const { return {(r_ + p_ - o.r_) % p_, p_}; }
  FpScalar operator*(FpScalar o) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_), p_};
  }
  friend bool operator==(FpScalar, FpScalar) = default;

 private:
  std::uint32_t r_;
  std::uint32_t p_;
};

// Dense matrix over F_p, row-major residues.
struct FpMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint32_t> data;

  FpMatrix() = default;
  FpMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
  static FpMatrix identity(int n);

  std::uint32_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  std::uint32_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, std::uint32_t p);
int rank_mod_p(FpMatrix m, std::uint32_t p);

// A point (A_e, I_i, B_e, J_i) of V_{v,w} x V*_{v,w}:
//   A_e : v_s(e) -> v_t(e)   (v_t x v_s)
//   B_e : v_t(e) -> v_s(e)   (v_s x v_t)
//   I_i : W_i -> V_i         (v_i x w_i)
//   J_i : V_i -> W_i         (w_i x v_i)
struct FFRep {
  std::uint32_t p = 2;
  std::vector<FpMatrix> a, b, i, j;

  static FFRep zero(const Quiver& q, const DimVector& v, const DimVector& w, std::uint32_t p);
  // Number of F_p coordinates, i.e. dim M_{v,w}.
  std::size_t dimension() const;
};

// One v_i x v_i matrix per vertex.
struct CoadjointValue {
  std::vector<FpMatrix> blocks;
  friend bool operator==(const CoadjointValue&, const CoadjointValue&) = default;
};

// mu_i = I_i J_i + sum_{s(e)=i} B_e A_e - sum_{t(e)=i} A_e B_e.
CoadjointValue moment_map(const Quiver& q, const FFRep& rep);

// Number of points of M_{v,w}(F_p) with mu = identity, by exhaustive
// enumeration. Requires p prime, p > sum v_i, p^dim M <= guard.
Integer count_bruteforce(const Quiver& q, const DimVector& v, const DimVector& w, long p,
                         std::uint64_t guard = kDefaultGuard, int jobs = 1);

// The same number through the character-sum identity
//   #{mu = 1} = |V| / |g| * sum_{x in g} |ker rho(x)| Psi(tr x).
// With T the kernel sum over trace-zero x and S over all x, scaling x by
// units shows every nonzero trace class contributes (S - T) / (p - 1), and
// sum_{t != 0} Psi(t) = -1, so the sum is T - (S - T)/(p - 1) and no
// character is ever evaluated. Requires p^dim g <= guard.
Integer count_fourier(const Quiver& q, const DimVector& v, const DimVector& w, long p,
                      std::uint64_t guard = kDefaultGuard, int jobs = 1);

// |prod_i GL_{v_i}(F_p)|
Integer group_order(const DimVector& v, long p);

enum class CountMethod { BruteForce, Fourier };

struct CountReport {
  DimVector v;
  DimVector w;
  long p = 0;
  Integer count;
  Integer group_order;
  bool divides = false;     // |G_v| | count
  Rational orbit_count;     // count / |G_v|
  Rational expected;        // p^d P_v(p)
  bool pass = false;
};

CountReport verify_count_vs_poincare(const Quiver& q, const DimVector& v, const DimVector& w, long p,
                                     std::uint64_t guard = kDefaultGuard,
                                     CountMethod method = CountMethod::BruteForce, int jobs = 1);
// Variant reusing a Poincare entry and a count computed elsewhere.
CountReport count_report(const DimVector& v, const DimVector& w, long p, const Integer& count,
                         const PoincareEntry& entry);

// Nilpotent n x n matrices over F_p grouped by Jordan type.
std::map<Partition, Integer> centralizer_census(int n, long p, std::uint64_t guard = kDefaultGuard);

// Jordan type of a nilpotent matrix (nullopt if not nilpotent).
std::optional<Partition> nilpotent_jordan_type(const FpMatrix& x, std::uint32_t p);

// Nilpotent Jordan matrix of the given type (ones on the superdiagonal of each block).
FpMatrix jordan_matrix(const Partition& lambda);

// #{A in Hom(V_lambda, V_mu) : A X_lambda = X_mu A} by enumeration.
Integer intertwiner_count(const Partition& lambda, const Partition& mu, long p,
                          std::uint64_t guard = kDefaultGuard);

}  // namespace quiverkac
