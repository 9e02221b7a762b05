#include "quiverkac/ffcount.hpp"

#include <algorithm>
#include <thread>

#include "quiverkac/errors.hpp"

namespace quiverkac {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FpScalar::FpScalar(std::uint32_t residue, std::uint32_t p) : r_(residue % p), p_(p) {}

FpMatrix FpMatrix::identity(int n) {
  FpMatrix m(n, n);
  for (int k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, std::uint32_t p) {
  if (a.cols != b.rows) throw UsageError("matrix shape mismatch");
  FpMatrix c(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r) {
    for (int k = 0; k < a.cols; ++k) {
      const std::uint64_t x = a.at(r, k);
      if (x == 0) continue;
      for (int col = 0; col < b.cols; ++col) c.at(r, col) = static_cast<std::uint32_t>((c.at(r, col) + x * b.at(k, col)) % p);
    }
  }
  return c;
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t checked_prime(long p) {
  if (!is_prime(p) || p > 65521) throw UsageError(std::to_string(p) + " is not a supported prime");
  return static_cast<std::uint32_t>(p);
}

// p^n, or nullopt when it exceeds limit.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t n, std::uint64_t limit) {
  std::uint64_t x = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (x > limit / p) return std::nullopt;
    x *= p;
  }
  return x;
}

std::uint64_t require_within_guard(std::uint32_t p, std::size_t n, std::uint64_t guard, const char* what) {
  auto size = bounded_power(p, n, guard);
  if (!size) {
    throw SearchSpaceTooLarge(std::string(what) + ": " + std::to_string(p) + "^" + std::to_string(n) +
                              " points exceed the enumeration guard " + std::to_string(guard));
  }
  return *size;
}

void require_characteristic(const DimVector& v, long p) {
  if (p <= v.total()) {
    throw CharacteristicTooSmall("characteristic " + std::to_string(p) + " must exceed sum(v) = " +
                                 std::to_string(v.total()));
  }
}

Integer integer_power(long p, long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

// Runs body(begin, end) over [0, total) split into `jobs` contiguous chunks
// and returns the per-chunk results in order.
template <typename Result, typename Body>
std::vector<Result> split_range(std::uint64_t total, int jobs, Body body) {
  jobs = std::max(1, jobs);
  std::vector<Result> results(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    results[0] = body(0, total);
    return results;
  }
  std::vector<std::jthread> workers;
  for (int k = 0; k < jobs; ++k) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(k) / static_cast<std::uint64_t>(jobs);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(k + 1) / static_cast<std::uint64_t>(jobs);
    workers.emplace_back([&results, &body, k, lo, hi] { results[static_cast<std::size_t>(k)] = body(lo, hi); });
  }
  workers.clear();
  return results;
}

// Writes the base-p digits of index into coords (coords[0] least significant).
void decode(std::uint64_t index, std::uint32_t p, const std::vector<std::uint32_t*>& coords) {
  for (auto* c : coords) {
    *c = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
}

// Odometer step; false on wrap-around.
bool increment(std::uint32_t p, const std::vector<std::uint32_t*>& coords) {
  for (auto* c : coords) {
    if (++*c < p) return true;
    *c = 0;
  }
  return false;
}

std::vector<std::uint32_t*> coordinates(FFRep& rep) {
  std::vector<std::uint32_t*> out;
  for (auto* group : {&rep.a, &rep.b, &rep.i, &rep.j}) {
    for (auto& m : *group) {
      for (auto& x : m.data) out.push_back(&x);
    }
  }
  return out;
}

bool moment_is_identity(const Quiver& q, const FFRep& rep, const DimVector& v) {
  const std::uint64_t p = rep.p;
  for (std::size_t vert = 0; vert < q.vertex_count(); ++vert) {
    const int n = v[vert];
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        std::uint64_t pos = 0;
        std::uint64_t neg = 0;
        const FpMatrix& im = rep.i[vert];
        const FpMatrix& jm = rep.j[vert];
        for (int k = 0; k < im.cols; ++k) pos += static_cast<std::uint64_t>(im.at(r, k)) * jm.at(k, c);
        for (std::size_t e = 0; e < q.edges().size(); ++e) {
          const Edge& edge = q.edges()[e];
          const FpMatrix& am = rep.a[e];
          const FpMatrix& bm = rep.b[e];
          if (edge.source == vert) {
            for (int k = 0; k < bm.cols; ++k) pos += static_cast<std::uint64_t>(bm.at(r, k)) * am.at(k, c);
          }
          if (edge.target == vert) {
            for (int k = 0; k < am.cols; ++k) neg += static_cast<std::uint64_t>(am.at(r, k)) * bm.at(k, c);
          }
        }
        const std::uint64_t value = (pos % p + p - neg % p) % p;
        if (value != (r == c ? 1U : 0U)) return false;
      }
    }
  }
  return true;
}

void validate_inputs(const Quiver& q, const DimVector& v, const DimVector& w, long p) {
  q.require_loop_free("finite-field counting");
  check_length(q, v, "v");
  check_length(q, w, "w");
  checked_prime(p);
  require_characteristic(v, p);
}

}  // namespace

int rank_mod_p(FpMatrix m, std::uint32_t p) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    }
    const std::uint64_t inv = inverse_mod(m.at(rank, col), p);
    for (int c = col; c < m.cols; ++c) m.at(rank, c) = static_cast<std::uint32_t>(m.at(rank, c) * inv % p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const std::uint64_t f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) {
        m.at(r, c) = static_cast<std::uint32_t>((m.at(r, c) + (p - f) * m.at(rank, c)) % p);
      }
    }
    ++rank;
  }
  return rank;
}

FFRep FFRep::zero(const Quiver& q, const DimVector& v, const DimVector& w, std::uint32_t p) {
  check_length(q, v, "v");
  check_length(q, w, "w");
  FFRep rep;
  rep.p = p;
  for (const auto& e : q.edges()) {
    rep.a.emplace_back(v[e.target], v[e.source]);
    rep.b.emplace_back(v[e.source], v[e.target]);
  }
  for (std::size_t k = 0; k < q.vertex_count(); ++k) {
    rep.i.emplace_back(v[k], w[k]);
    rep.j.emplace_back(w[k], v[k]);
  }
  return rep;
}

std::size_t FFRep::dimension() const {
  std::size_t n = 0;
  for (const auto* group : {&a, &b, &i, &j}) {
    for (const auto& m : *group) n += m.data.size();
  }
  return n;
}

CoadjointValue moment_map(const Quiver& q, const FFRep& rep) {
  if (rep.i.size() != q.vertex_count() || rep.a.size() != q.edges().size()) {
    throw UsageError("representation does not match the quiver");
  }
  const std::uint32_t p = rep.p;
  CoadjointValue out;
  for (std::size_t k = 0; k < q.vertex_count(); ++k) out.blocks.push_back(multiply(rep.i[k], rep.j[k], p));
  auto accumulate = [p](FpMatrix& into, const FpMatrix& term, bool subtract) {
    if (into.rows != term.rows || into.cols != term.cols) throw UsageError("representation shapes are inconsistent");
    for (std::size_t x = 0; x < into.data.size(); ++x) {
      into.data[x] = subtract ? (into.data[x] + p - term.data[x]) % p : (into.data[x] + term.data[x]) % p;
    }
  };
  for (std::size_t e = 0; e < q.edges().size(); ++e) {
    const Edge& edge = q.edges()[e];
    accumulate(out.blocks[edge.source], multiply(rep.b[e], rep.a[e], p), false);
    accumulate(out.blocks[edge.target], multiply(rep.a[e], rep.b[e], p), true);
  }
  return out;
}

Integer count_bruteforce(const Quiver& q, const DimVector& v, const DimVector& w, long p, std::uint64_t guard,
                         int jobs) {
  validate_inputs(q, v, w, p);
  const std::uint32_t prime = checked_prime(p);
  const FFRep proto = FFRep::zero(q, v, w, prime);
  const std::uint64_t total = require_within_guard(prime, proto.dimension(), guard, "brute-force count");
  auto chunks = split_range<std::uint64_t>(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    if (lo >= hi) return 0;
    FFRep rep = proto;
    auto coords = coordinates(rep);
    decode(lo, prime, coords);
    std::uint64_t hits = 0;
    for (std::uint64_t k = lo; k < hi; ++k) {
      if (moment_is_identity(q, rep, v)) ++hits;
      increment(prime, coords);
    }
    return hits;
  });
  Integer count = 0;
  for (auto c : chunks) count += Integer(static_cast<unsigned long>(c));
  return count;
}

Integer count_fourier(const Quiver& q, const DimVector& v, const DimVector& w, long p, std::uint64_t guard,
                      int jobs) {
  validate_inputs(q, v, w, p);
  const std::uint32_t prime = checked_prime(p);
  const std::size_t n = q.vertex_count();
  std::size_t dim_g = 0;
  std::size_t dim_v = 0;
  for (std::size_t k = 0; k < n; ++k) {
    dim_g += static_cast<std::size_t>(v[k]) * static_cast<std::size_t>(v[k]);
    dim_v += static_cast<std::size_t>(v[k]) * static_cast<std::size_t>(w[k]);
  }
  for (const auto& e : q.edges()) dim_v += static_cast<std::size_t>(v[e.source]) * static_cast<std::size_t>(v[e.target]);
  const std::uint64_t total = require_within_guard(prime, dim_g, guard, "Fourier count");

  // Histograms of dim ker rho(x): index 0 for trace-zero x, index 1 for all x.
  using Histogram = std::vector<std::uint64_t>;
  struct Hist {
    Histogram zero_trace;
    Histogram all;
  };
  auto chunks = split_range<Hist>(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    Hist h{Histogram(dim_v + 1, 0), Histogram(dim_v + 1, 0)};
    if (lo >= hi) return h;
    std::vector<FpMatrix> x;
    for (std::size_t k = 0; k < n; ++k) x.emplace_back(v[k], v[k]);
    std::vector<std::uint32_t*> coords;
    for (auto& m : x) {
      for (auto& c : m.data) coords.push_back(&c);
    }
    decode(lo, prime, coords);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t trace = 0;
      std::size_t kernel = 0;
      for (std::size_t k = 0; k < n; ++k) {
        for (int d = 0; d < v[k]; ++d) trace += x[k].at(d, d);
        // I_k -> x_k I_k: w_k copies of x_k.
        kernel += static_cast<std::size_t>(w[k]) * static_cast<std::size_t>(v[k] - rank_mod_p(x[k], prime));
      }
      for (const auto& e : q.edges()) {
        // A -> x_t A - A x_s on v_t x v_s matrices.
        const int rows = v[e.target];
        const int cols = v[e.source];
        const int size = rows * cols;
        if (size == 0) continue;
        const FpMatrix& xt = x[e.target];
        const FpMatrix& xs = x[e.source];
        FpMatrix op(size, size);
        for (int r = 0; r < rows; ++r) {
          for (int c = 0; c < cols; ++c) {
            const int in = r * cols + c;  // basis matrix E_rc
            for (int r2 = 0; r2 < rows; ++r2) op.at(r2 * cols + c, in) = (op.at(r2 * cols + c, in) + xt.at(r2, r)) % prime;
            for (int c2 = 0; c2 < cols; ++c2) {
              op.at(r * cols + c2, in) = (op.at(r * cols + c2, in) + prime - xs.at(c, c2)) % prime;
            }
          }
        }
        kernel += static_cast<std::size_t>(size - rank_mod_p(std::move(op), prime));
      }
      ++h.all[kernel];
      if (trace % prime == 0) ++h.zero_trace[kernel];
      increment(prime, coords);
    }
    return h;
  });
  Integer t = 0;
  Integer s = 0;
  for (const auto& h : chunks) {
    for (std::size_t k = 0; k <= dim_v; ++k) {
      const Integer pk = integer_power(p, static_cast<long>(k));
      t += pk * Integer(static_cast<unsigned long>(h.zero_trace[k]));
      s += pk * Integer(static_cast<unsigned long>(h.all[k]));
    }
  }
  const Integer rest = s - t;
  if (!mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p - 1))) {
    throw InternalNonInteger("nonzero-trace kernel sum is not divisible by p - 1");
  }
  Integer character_sum = t - rest / Integer(p - 1);
  Integer numerator = integer_power(p, static_cast<long>(dim_v)) * character_sum;
  const Integer g = integer_power(p, static_cast<long>(dim_g));
  if (!mpz_divisible_p(numerator.get_mpz_t(), g.get_mpz_t())) {
    throw InternalNonInteger("Fourier count is not an integer");
  }
  return numerator / g;
}

Integer group_order(const DimVector& v, long p) {
  Integer order = 1;
  for (int n : v) {
    const Integer pn = integer_power(p, n);
    for (int j = 0; j < n; ++j) order *= pn - integer_power(p, j);
  }
  return order;
}

CountReport count_report(const DimVector& v, const DimVector& w, long p, const Integer& count,
                         const PoincareEntry& entry) {
  CountReport r;
  r.v = v;
  r.w = w;
  r.p = p;
  r.count = count;
  r.group_order = group_order(v, p);
  r.divides = mpz_divisible_p(count.get_mpz_t(), r.group_order.get_mpz_t()) != 0;
  r.orbit_count = Rational(count, r.group_order);
  r.orbit_count.canonicalize();
  r.expected = expected_orbit_count(entry, p);
  r.pass = r.divides && r.orbit_count == r.expected;
  return r;
}

CountReport verify_count_vs_poincare(const Quiver& q, const DimVector& v, const DimVector& w, long p,
                                     std::uint64_t guard, CountMethod method, int jobs) {
  const Integer count = method == CountMethod::BruteForce ? count_bruteforce(q, v, w, p, guard, jobs)
                                                          : count_fourier(q, v, w, p, guard, jobs);
  PoincareTable table = poincare_series(q, w, Box(v), jobs);
  return count_report(v, w, p, count, table.at(v));
}

std::optional<Partition> nilpotent_jordan_type(const FpMatrix& x, std::uint32_t p) {
  const int n = x.rows;
  // dim ker x^k for k = 0..n; lambda'_k = ker_k - ker_{k-1}.
  std::vector<int> kernel{0};
  FpMatrix power = FpMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = multiply(power, x, p);
    kernel.push_back(n - rank_mod_p(power, p));
  }
  if (kernel.back() != n) return std::nullopt;
  std::vector<int> conj;
  for (int k = 1; k <= n; ++k) {
    const int d = kernel[static_cast<std::size_t>(k)] - kernel[static_cast<std::size_t>(k - 1)];
    if (d > 0) conj.push_back(d);
  }
  return Partition(std::move(conj)).conjugate();
}

std::map<Partition, Integer> centralizer_census(int n, long p, std::uint64_t guard) {
  if (n < 0) throw UsageError("matrix size must be nonnegative");
  const std::uint32_t prime = checked_prime(p);
  const std::uint64_t total = require_within_guard(prime, static_cast<std::size_t>(n) * static_cast<std::size_t>(n), guard,
                                                   "nilpotent census");
  std::map<Partition, Integer> census;
  FpMatrix x(n, n);
  std::vector<std::uint32_t*> coords;
  for (auto& c : x.data) coords.push_back(&c);
  for (std::uint64_t k = 0; k < total; ++k) {
    if (auto type = nilpotent_jordan_type(x, prime)) census[*type] += 1;
    increment(prime, coords);
  }
  return census;
}

FpMatrix jordan_matrix(const Partition& lambda) {
  FpMatrix m(lambda.size(), lambda.size());
  int start = 0;
  for (int part : lambda.parts()) {
    for (int k = 0; k + 1 < part; ++k) m.at(start + k, start + k + 1) = 1;
    start += part;
  }
  return m;
}

Integer intertwiner_count(const Partition& lambda, const Partition& mu, long p, std::uint64_t guard) {
  const std::uint32_t prime = checked_prime(p);
  const FpMatrix x1 = jordan_matrix(lambda);
  const FpMatrix x2 = jordan_matrix(mu);
  FpMatrix a(mu.size(), lambda.size());
  const std::uint64_t total = require_within_guard(prime, a.data.size(), guard, "intertwiner count");
  std::vector<std::uint32_t*> coords;
  for (auto& c : a.data) coords.push_back(&c);
  Integer count = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (multiply(a, x1, prime) == multiply(x2, a, prime)) count += 1;
    increment(prime, coords);
  }
  return count;
}

}  // namespace quiverkac
