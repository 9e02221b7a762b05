#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverkac/betti.hpp"
#include "quiverkac/ffcount.hpp"
#include "quiverkac/hua.hpp"
#include "quiverkac/weyl.hpp"

namespace quiverkac::cli {

// 0 all checks pass, 1 a verification failed, 2 usage/config, 3 internal invariant.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

enum class Format { Plain, Json, Csv };

struct RunConfig {
  std::string command;
  std::string quiver_path;
  DimVector bound;
  std::optional<DimVector> w;
  std::vector<long> primes{3, 5};
  Format format = Format::Plain;
  int jobs = 1;
  std::uint64_t guard = kDefaultGuard;
};

struct KacRow {
  DimVector alpha;
  Integer constant_term;
  std::int64_t multiplicity;
  bool pass;
};

struct FieldRow {
  DimVector v;
  long p = 0;
  std::string status;  // "pass", "fail" or "skipped: <reason>"
  std::optional<Integer> bruteforce;
  std::optional<Integer> fourier;
  std::optional<CountReport> report;
};

struct VerifyReport {
  DimVector w;
  std::vector<KacRow> kac;
  ChainReport chain;
  std::vector<FieldRow> field;
  bool all_pass() const;
};

nlohmann::json to_json(const Quiver& q);
nlohmann::json apoly_to_json(const APolyTable& table);
APolyTable apoly_from_json(const nlohmann::json& j);
nlohmann::json multiplicities_to_json(const MultiplicityTable& table);
MultiplicityTable multiplicities_from_json(const nlohmann::json& j);
nlohmann::json betti_to_json(const PoincareTable& table);
PoincareTable betti_from_json(const nlohmann::json& j);
nlohmann::json verify_to_json(const VerifyReport& report);

std::string render_apoly(const APolyTable& table, Format format);
std::string render_multiplicities(const MultiplicityTable& table, Format format, bool include_zero_vector);
std::string render_betti(const PoincareTable& table, Format format);
std::string render_verify(const VerifyReport& report, Format format);

VerifyReport run_verify(const Quiver& q, const RunConfig& config);

// Entry point shared by the binary and the tests; args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverkac::cli
