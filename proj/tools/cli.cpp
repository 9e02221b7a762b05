#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quiverkac/errors.hpp"

namespace quiverkac::cli {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(static_cast<long>(j.get<std::int64_t>()));
}

json poly_to_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(integer_to_json(c));
  return coeffs;
}

IntPoly poly_from_json(const json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return IntPoly(std::move(c));
}

json dim_to_json(const DimVector& v) { return json(std::vector<int>(v.begin(), v.end())); }

DimVector dim_from_json(const json& j) { return DimVector(j.get<std::vector<int>>()); }

std::string csv_dim(const DimVector& v) {
  std::string s = v.to_string();
  return "\"" + s.substr(1, s.size() - 2) + "\"";
}

std::string csv_poly(const IntPoly& p) {
  std::string s = "\"";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) s += (k ? "," : "") + p.coefficients()[k].get_str();
  return s + "\"";
}

std::string joined(const std::vector<Integer>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + xs[k].get_str();
  return s;
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& r : kac) {
    if (!r.pass) return false;
  }
  for (const auto& r : field) {
    if (r.status == "fail") return false;
  }
  return chain.all_pass();
}

json to_json(const Quiver& q) {
  json edges = json::array();
  for (const auto& e : q.edges()) edges.push_back({e.source + 1, e.target + 1});
  return {{"vertices", q.vertex_count()}, {"edges", edges}};
}

json apoly_to_json(const APolyTable& table) {
  json rows = json::array();
  for (const auto& [alpha, poly] : table) {
    rows.push_back({{"alpha", dim_to_json(alpha)}, {"coefficients", poly_to_json(poly)}, {"poly", poly.to_string()}});
  }
  return {{"rows", rows}};
}

APolyTable apoly_from_json(const json& j) {
  APolyTable table;
  for (const auto& row : j.at("rows")) table.emplace(dim_from_json(row.at("alpha")), poly_from_json(row.at("coefficients")));
  return table;
}

json multiplicities_to_json(const MultiplicityTable& table) {
  json rows = json::array();
  for (const auto& [alpha, m] : table) rows.push_back({{"alpha", dim_to_json(alpha)}, {"multiplicity", m}});
  return {{"rows", rows}};
}

MultiplicityTable multiplicities_from_json(const json& j) {
  MultiplicityTable table;
  for (const auto& row : j.at("rows")) {
    table.emplace(dim_from_json(row.at("alpha")), row.at("multiplicity").get<std::int64_t>());
  }
  return table;
}

json betti_to_json(const PoincareTable& table) {
  json rows = json::array();
  for (const auto& [v, e] : table.entries) {
    json betti = json::array();
    for (const auto& b : betti_numbers(table, v)) betti.push_back(integer_to_json(b));
    rows.push_back({{"v", dim_to_json(v)},
                    {"d", e.half_dimension},
                    {"coefficients", poly_to_json(e.poincare)},
                    {"poly", e.poincare.to_string()},
                    {"betti", betti}});
  }
  return {{"w", dim_to_json(table.w)}, {"rows", rows}};
}

PoincareTable betti_from_json(const json& j) {
  PoincareTable table;
  table.w = dim_from_json(j.at("w"));
  for (const auto& row : j.at("rows")) {
    PoincareEntry e;
    e.half_dimension = row.at("d").get<long>();
    e.poincare = poly_from_json(row.at("coefficients"));
    table.entries.emplace(dim_from_json(row.at("v")), std::move(e));
  }
  return table;
}

json verify_to_json(const VerifyReport& report) {
  json kac = json::array();
  for (const auto& r : report.kac) {
    kac.push_back({{"alpha", dim_to_json(r.alpha)},
                   {"constant_term", integer_to_json(r.constant_term)},
                   {"multiplicity", r.multiplicity},
                   {"pass", r.pass}});
  }
  json chain = json::array();
  for (const auto& r : report.chain.rows) {
    chain.push_back({{"v", dim_to_json(r.v)},
                     {"top_betti", integer_to_json(r.top_betti)},
                     {"multiplicity", r.multiplicity},
                     {"pass", r.pass}});
  }
  json field = json::array();
  for (const auto& r : report.field) {
    json row = {{"v", dim_to_json(r.v)}, {"p", r.p}, {"status", r.status}};
    if (r.bruteforce) row["bruteforce"] = integer_to_json(*r.bruteforce);
    if (r.fourier) row["fourier"] = integer_to_json(*r.fourier);
    if (r.report) {
      row["group_order"] = integer_to_json(r.report->group_order);
      row["divides"] = r.report->divides;
      row["orbit_count"] = r.report->orbit_count.get_str();
      row["expected"] = r.report->expected.get_str();
    }
    field.push_back(row);
  }
  return {{"w", dim_to_json(report.w)}, {"kac", kac}, {"chain", chain}, {"finite_field", field},
          {"all_pass", report.all_pass()}};
}

std::string render_apoly(const APolyTable& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << apoly_to_json(table).dump(2) << "\n";
      break;
    case Format::Csv:
      os << "alpha,coefficients,poly\n";
      for (const auto& [alpha, poly] : table) os << csv_dim(alpha) << "," << csv_poly(poly) << "," << poly.to_string() << "\n";
      break;
    case Format::Plain:
      for (const auto& [alpha, poly] : table) os << "α=" << alpha.to_string() << ": " << poly.to_string() << "\n";
      break;
  }
  return os.str();
}

std::string render_multiplicities(const MultiplicityTable& table, Format format, bool include_zero_vector) {
  MultiplicityTable shown;
  for (const auto& [alpha, m] : table) {
    if (include_zero_vector || !alpha.is_zero()) shown.emplace(alpha, m);
  }
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << multiplicities_to_json(shown).dump(2) << "\n";
      break;
    case Format::Csv:
      os << "alpha,multiplicity\n";
      for (const auto& [alpha, m] : shown) os << csv_dim(alpha) << "," << m << "\n";
      break;
    case Format::Plain:
      for (const auto& [alpha, m] : shown) os << "α=" << alpha.to_string() << ": " << m << "\n";
      break;
  }
  return os.str();
}

std::string render_betti(const PoincareTable& table, Format format) {
  PoincareTable shown;
  shown.w = table.w;
  for (const auto& [v, e] : table.entries) {
    if (!v.is_zero()) shown.entries.emplace(v, e);
  }
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << betti_to_json(shown).dump(2) << "\n";
      break;
    case Format::Csv:
      os << "v,d,coefficients,poly,betti\n";
      for (const auto& [v, e] : shown.entries) {
        os << csv_dim(v) << "," << e.half_dimension << "," << csv_poly(e.poincare) << "," << e.poincare.to_string()
           << ",\"" << joined(betti_numbers(shown, v)) << "\"\n";
      }
      break;
    case Format::Plain:
      for (const auto& [v, e] : shown.entries) {
        os << "v=" << v.to_string() << ": " << e.poincare.to_string() << "    d=" << e.half_dimension << " b=["
           << joined(betti_numbers(shown, v)) << "]\n";
      }
      break;
  }
  return os.str();
}

std::string render_verify(const VerifyReport& report, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    os << verify_to_json(report).dump(2) << "\n";
    return os.str();
  }
  auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  auto tally = [&](const std::string& status) {
    if (status == "pass") {
      ++pass;
    } else if (status == "fail") {
      ++fail;
    } else {
      ++skipped;
    }
  };
  if (format == Format::Csv) os << "check,vector,p,lhs,rhs,status\n";
  for (const auto& r : report.kac) {
    tally(verdict(r.pass));
    if (format == Format::Csv) {
      os << "kac," << csv_dim(r.alpha) << ",," << r.constant_term.get_str() << "," << r.multiplicity << "," << verdict(r.pass) << "\n";
    } else {
      os << "kac    α=" << r.alpha.to_string() << "  A(α,0)=" << r.constant_term.get_str() << "  m=" << r.multiplicity
         << "  " << verdict(r.pass) << "\n";
    }
  }
  for (const auto& r : report.chain.rows) {
    tally(verdict(r.pass));
    if (format == Format::Csv) {
      os << "chain," << csv_dim(r.v) << ",," << r.top_betti.get_str() << "," << r.multiplicity << "," << verdict(r.pass) << "\n";
    } else {
      os << "chain  v=" << r.v.to_string() << "  w=" << report.w.to_string() << "  P(0)=" << r.top_betti.get_str()
         << "  mult=" << r.multiplicity << "  " << verdict(r.pass) << "\n";
    }
  }
  for (const auto& r : report.field) {
    tally(r.status);
    const std::string lhs = r.report ? r.report->orbit_count.get_str() : "";
    const std::string rhs = r.report ? r.report->expected.get_str() : "";
    if (format == Format::Csv) {
      os << "finite_field," << csv_dim(r.v) << "," << r.p << "," << lhs << "," << rhs << "," << r.status << "\n";
      continue;
    }
    os << "field  v=" << r.v.to_string() << "  p=" << r.p;
    if (r.bruteforce) os << "  brute=" << r.bruteforce->get_str();
    if (r.fourier) os << "  fourier=" << r.fourier->get_str();
    if (r.report) os << "  |G|=" << r.report->group_order.get_str() << "  count/|G|=" << lhs << "  p^d·P(p)=" << rhs;
    os << "  " << r.status << "\n";
  }
  if (format == Format::Plain) {
    os << "summary: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
  }
  return os.str();
}

VerifyReport run_verify(const Quiver& q, const RunConfig& config) {
  q.require_loop_free("verify");
  const Box region(config.bound);
  VerifyReport report;
  report.w = config.w.value_or(DimVector(std::vector<int>(q.vertex_count(), 1)));

  const APolyTable apoly = kac_a_polynomials(q, region, config.jobs);
  const MultiplicityTable roots = root_multiplicities(q, region);
  for (const auto& [alpha, poly] : apoly) {
    const std::int64_t m = roots.at(alpha);
    const Integer c = poly.coefficient(0);
    report.kac.push_back({alpha, c, m, c == Integer(static_cast<long>(m))});
  }

  report.chain = top_betti_equals_weight_multiplicity(q, report.w, region, config.jobs);

  const PoincareTable table = poincare_series(q, report.w, region, config.jobs);
  for (const auto& v : region.points()) {
    for (long p : config.primes) {
      FieldRow row;
      row.v = v;
      row.p = p;
      if (p <= v.total()) {
        row.status = "skipped: p <= sum(v)";
        report.field.push_back(std::move(row));
        continue;
      }
      try {
        row.fourier = count_fourier(q, v, report.w, p, config.guard, config.jobs);
      } catch (const SearchSpaceTooLarge&) {
      }
      try {
        row.bruteforce = count_bruteforce(q, v, report.w, p, config.guard, config.jobs);
      } catch (const SearchSpaceTooLarge&) {
      }
      if (!row.fourier && !row.bruteforce) {
        row.status = "skipped: beyond guard";
        report.field.push_back(std::move(row));
        continue;
      }
      const Integer count = row.bruteforce ? *row.bruteforce : *row.fourier;
      row.report = count_report(v, report.w, p, count, table.at(v));
      bool ok = row.report->pass;
      if (row.fourier && row.bruteforce) ok = ok && (*row.fourier == *row.bruteforce);
      row.status = ok ? "pass" : "fail";
      report.field.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

std::uint64_t guard_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("QUIVERKAC_GUARD");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t pos = 0;
    const unsigned long long g = std::stoull(env, &pos);
    if (pos != std::string(env).size() || g == 0) throw std::invalid_argument("guard");
    return g;
  } catch (const std::exception&) {
    throw UsageError(std::string("QUIVERKAC_GUARD is not a positive integer: ") + env);
  }
}

std::vector<long> parse_primes(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long p = 0;
    try {
      p = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad prime '" + item + "'");
    }
    if (pos != item.size() || !is_prime(p)) throw UsageError("'" + item + "' is not a prime");
    out.push_back(p);
  }
  if (out.empty()) throw UsageError("empty prime list");
  return out;
}

int execute(const RunConfig& config, std::ostream& out) {
  const Quiver q = load_quiver(config.quiver_path);
  check_length(q, config.bound, "--bound");
  if (config.w) check_length(q, *config.w, "--w");
  const Box region(config.bound);
  if (config.command == "apoly") {
    out << render_apoly(kac_a_polynomials(q, region, config.jobs), config.format);
    return kOk;
  }
  if (config.command == "mult") {
    out << render_multiplicities(root_multiplicities(q, region), config.format, false);
    return kOk;
  }
  if (config.command == "char") {
    out << render_multiplicities(character_multiplicities(q, *config.w, region), config.format, true);
    return kOk;
  }
  if (config.command == "betti") {
    out << render_betti(poincare_series(q, *config.w, region, config.jobs), config.format);
    return kOk;
  }
  const VerifyReport report = run_verify(q, config);
  out << render_verify(report, config.format);
  return report.all_pass() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers of quiver varieties, Kac polynomials and Kac-Moody multiplicities", "quiverkac"};
  RunConfig config;
  std::string bound_csv;
  std::string w_csv;
  std::string primes_csv;
  std::string format = "plain";
  std::optional<std::uint64_t> guard_flag;
  app.add_option("command", config.command, "apoly | mult | char | betti | verify")
      ->required()
      ->check(CLI::IsMember({"apoly", "mult", "char", "betti", "verify"}));
  app.add_option("--quiver", config.quiver_path, "quiver file")->required();
  app.add_option("--bound", bound_csv, "dimension-vector bound, e.g. 2,2")->required();
  app.add_option("--w", w_csv, "framing dimension vector");
  app.add_option("--primes", primes_csv, "primes for finite-field checks (default 3,5)");
  app.add_option("--format", format, "plain | json | csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--guard", guard_flag, "maximum points per enumeration (env QUIVERKAC_GUARD)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    config.bound = parse_dimvector(bound_csv);
    if (!w_csv.empty()) config.w = parse_dimvector(w_csv);
    if (!primes_csv.empty()) config.primes = parse_primes(primes_csv);
    config.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Plain;
    config.guard = guard_flag ? *guard_flag : guard_from_env(kDefaultGuard);
    if ((config.command == "char" || config.command == "betti") && !config.w) {
      err << "error: " << config.command << " requires --w\n" << app.help();
      return kUsage;
    }
    return execute(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace quiverkac::cli
