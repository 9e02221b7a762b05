#include "quiverkac/quiver.hpp"

#include <fstream>
#include <sstream>

#include "quiverkac/errors.hpp"

namespace quiverkac {

Quiver::Quiver(std::size_t vertices, std::vector<Edge> edges) : n_(vertices), edges_(std::move(edges)) {
  if (n_ == 0) throw UsageError("a quiver needs at least one vertex");
  for (const auto& e : edges_) {
    if (e.source >= n_ || e.target >= n_) throw UsageError("edge endpoint out of range");
  }
}

int Quiver::edges_between(std::size_t i, std::size_t j) const {
  int b = 0;
  for (const auto& e : edges_) {
    if ((e.source == i && e.target == j) || (e.source == j && e.target == i)) ++b;
  }
  return b;
}

int Quiver::loops_at(std::size_t i) const {
  int c = 0;
  for (const auto& e : edges_) c += (e.is_loop() && e.source == i);
  return c;
}

bool Quiver::has_loops() const {
  for (const auto& e : edges_) {
    if (e.is_loop()) return true;
  }
  return false;
}

void Quiver::require_loop_free(const std::string& what) const {
  if (has_loops()) throw LoopNotAllowed(what + " requires a quiver without loops");
}

Quiver Quiver::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const auto& e : edges_) rev.push_back({e.target, e.source});
  return Quiver(n_, std::move(rev));
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

long to_index(const std::string& s, int line) {
  std::size_t pos = 0;
  long x = 0;
  try {
    x = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return x;
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = tokens(raw);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok[0] != "vertices" || tok.size() != 2) throw ParseError(line_no, "expected 'vertices <n>'");
      n = to_index(tok[1], line_no);
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      continue;
    }
    if (tok[0] != "edge" || tok.size() != 3) throw ParseError(line_no, "expected 'edge <i> <j>'");
    long i = to_index(tok[1], line_no);
    long j = to_index(tok[2], line_no);
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
    }
    edges.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)});
  }
  if (n < 0) throw ParseError(line_no + 1, "missing 'vertices <n>' line");
  return Quiver(static_cast<std::size_t>(n), std::move(edges));
}

Quiver load_quiver(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open quiver file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_quiver(ss.str());
}

std::string serialize_quiver(const Quiver& q) {
  std::ostringstream os;
  os << "vertices " << q.vertex_count() << "\n";
  for (const auto& e : q.edges()) os << "edge " << e.source + 1 << " " << e.target + 1 << "\n";
  return os.str();
}

void check_length(const Quiver& q, const DimVector& v, const std::string& name) {
  if (v.size() != q.vertex_count()) {
    throw LengthMismatch(name + " has " + std::to_string(v.size()) + " entries but the quiver has " +
                         std::to_string(q.vertex_count()) + " vertices");
  }
}

long half_dimension(const Quiver& q, const DimVector& v, const DimVector& w) {
  check_length(q, v, "v");
  check_length(q, w, "w");
  long d = 0;
  for (const auto& e : q.edges()) d += static_cast<long>(v[e.source]) * v[e.target];
  for (std::size_t i = 0; i < v.size(); ++i) d += static_cast<long>(v[i]) * (w[i] - v[i]);
  return d;
}

std::vector<std::vector<int>> cartan_matrix(const Quiver& q) {
  q.require_loop_free("the Cartan matrix");
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& e : q.edges()) {
    --c[e.source][e.target];
    --c[e.target][e.source];
  }
  return c;
}

}  // namespace quiverkac
