#pragma once

#include <string>
#include <string_view>

#include "fanochern/coefficients.hpp"

namespace fanochern {

// Certificates are JSON documents recording a command, its parameters and the
// result payload it produced. Replaying a certificate reruns the command from
// the recorded parameters and compares payloads; timestamp, elapsed time and
// tool version are metadata and never compared.
//
// Fields: schema_version, command, parameters, tool_version, timestamp, and
// for "verify": verified {i_lo, i_hi, j_list, strict}, violations
// [{i, j, k, value}], coefficients_checked, observations, elapsed_seconds;
// for "table" and "bernoulli": table.

inline constexpr std::string_view kCertificateSchemaVersion = "1.0";

std::string_view tool_version();

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

std::string verify_certificate(const PositivityReport& report);
std::string table_certificate(int j, int i_max);
std::string bernoulli_certificate(unsigned max_m);

struct ReplayOutcome {
  std::string command;
  bool matches = false;
  /// Names of payload fields that differ; empty when matches.
  std::string detail;
};

/// Throws std::invalid_argument when the text is not a certificate this tool
/// can replay.
ReplayOutcome replay_certificate(std::string_view json_text, unsigned workers = 1);

}  // namespace fanochern
