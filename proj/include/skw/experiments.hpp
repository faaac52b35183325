#pragma once

#include "skw/meataxe.hpp"
#include "skw/pchar.hpp"
#include "skw/superalg.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace skw {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "skwlab-report/1";

struct ExperimentSpec {
    std::string suite;  // AC1 ... AC11
    // Optional filters restricting the suite's default grid.
    std::optional<Family> family;
    std::optional<unsigned> n, p, k;
    std::uint64_t seed = 42;
    // JSON {"cases": {"<case id>": {"<key>": value, ...}}} replacing expected values.
    std::optional<std::filesystem::path> expect;
};

const std::vector<std::string>& suite_ids();

// Runs the suite and returns its report.  Every case carries `expected` and
// `observed` objects; a case matches when each expected key agrees.
json run_experiment(const ExperimentSpec& spec);

// The report with its `timings` member removed.
json without_timings(json report);
// Write to a temporary sibling, then rename.
void write_json_atomic(const json& doc, const std::filesystem::path& path);

// Report fragments shared with the command line tool.
json u128_json(u128 v);  // number when it fits in 64 bits, decimal string otherwise
json field_json(const Field& F);
json chi_json(const PChar& chi, const std::string& kind);
json vec_json(const Vec& v);
json certificate_json(const SimplicityCertificate& c);

} // namespace skw
