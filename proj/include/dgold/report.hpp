#ifndef DGOLD_REPORT_HPP
#define DGOLD_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgold/digitset.hpp"

namespace dgold {

inline constexpr const char* kToolVersion = "dgold 0.1.0";

// One parsed command invocation.  Validated against module preconditions
// before any work is dispatched.
struct RunConfig {
  std::string command;
  int base = 10;
  std::vector<int> digits;
  int k = 1;
  double delta0 = 0.05;
  double y = 1.0;
  int s = 2;
  int s_min = 1, s_max = 0;              // 0: derive s_max from the moment cap
  std::uint64_t m_min = 2, m_max = 10000;
  std::uint64_t grid_n = 0;              // 0: smallest power of two > 2X
  std::uint64_t cutoff = 0;              // 0: derive from delta0
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  double ref_delta = 0.1;                // exponent for the |A_k|^(1-delta) reference
  std::string format = "csv";            // csv | json
  std::string output;                    // empty: stdout
  std::string cache_path;                // empty: no sieve cache
  int threads = 1;

  RestrictedSet make_set() const { return RestrictedSet(DigitSystem(base, digits), k); }
  nlohmann::ordered_json echo() const;
};

// Tabular result with a config echo and a summary object.  Rows are JSON
// values (objects, or bare scalars for plain listings); every double stored
// in a report must already be rounded through round12 so the CSV and JSON
// renderings carry identical numeric payloads.
struct Report {
  std::string command;
  nlohmann::ordered_json config;
  std::vector<std::string> columns;
  std::vector<nlohmann::ordered_json> rows;
  nlohmann::ordered_json summary;
};

// 12-significant-digit representation used for every float a report emits.
std::string format12(double v);
double round12(double v);

void write_csv(const Report& report, std::ostream& out);
void write_json(const Report& report, std::ostream& out);
void write_report(const Report& report, const RunConfig& config);

// Parsed-back CSV payload, for round-trip checks.
struct ParsedCsv {
  std::vector<std::string> metadata;  // '#' lines, prefix stripped
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};
ParsedCsv parse_csv(std::istream& in);

}  // namespace dgold

#endif  // DGOLD_REPORT_HPP
