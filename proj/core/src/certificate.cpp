#include "fanochern/certificate.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

#include "fanochern/combinatorics.hpp"
#include "json.hpp"

#ifndef FANOCHERN_VERSION
#define FANOCHERN_VERSION "0.0.0"
#endif

namespace fanochern {

namespace {

using Json = nlohmann::ordered_json;

Json header(std::string_view command, Json parameters) {
  return Json{{"schema_version", kCertificateSchemaVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"tool_version", tool_version()},
              {"timestamp", utc_timestamp()}};
}

Json verify_payload(const PositivityReport& report) {
  Json payload;
  payload["verified"] = {{"i_lo", report.i_lo},
                         {"i_hi", report.i_hi},
                         {"j_list", Json(std::vector<int>(report.j_set.begin(), report.j_set.end()))},
                         {"strict", report.strict}};
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"i", v.index.i}, {"j", v.index.j}, {"k", v.index.k}, {"value", v.value.str()}});
  }
  payload["violations"] = std::move(violations);
  payload["coefficients_checked"] = report.coefficients_checked;
  Json observations = Json::array();
  for (const auto& p : report.patterns) {
    observations.push_back({{"name", p.name},
                            {"description", p.description},
                            {"checked", p.checked},
                            {"matched", p.matched}});
  }
  payload["observations"] = std::move(observations);
  return payload;
}

Json table_payload(int j, int i_max) {
  Json rows = Json::array();
  for (int i = 1; i <= i_max; ++i) {
    Json row = Json::array();
    for (const auto& v : b_row(i, j)) row.push_back(v.str());
    rows.push_back(std::move(row));
  }
  return Json{{"table", std::move(rows)}};
}

Json bernoulli_payload(unsigned max_m) {
  Json values = Json::array();
  for (const auto& v : bernoulli_table(max_m)) values.push_back(v.str());
  return Json{{"table", std::move(values)}};
}

std::string finish(Json certificate, const Json& payload) {
  for (const auto& [key, value] : payload.items()) certificate[key] = value;
  return certificate.dump(2) + "\n";
}

// Object key order carries no meaning in a certificate.
nlohmann::json unordered(const Json& value) { return nlohmann::json::parse(value.dump()); }

template <typename T>
T parameter(const Json& parameters, const char* name) {
  if (!parameters.contains(name)) throw std::invalid_argument(std::string("certificate: missing parameter ") + name);
  try {
    return parameters.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate: bad parameter ") + name + ": " + e.what());
  }
}

}  // namespace

std::string_view tool_version() { return FANOCHERN_VERSION; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string verify_certificate(const PositivityReport& report) {
  Json parameters{{"i_lo", report.i_lo},
                  {"i_hi", report.i_hi},
                  {"j_list", Json(std::vector<int>(report.j_set.begin(), report.j_set.end()))},
                  {"strict", report.strict}};
  Json certificate = header("verify", std::move(parameters));
  certificate["elapsed_seconds"] = report.elapsed.count();
  return finish(std::move(certificate), verify_payload(report));
}

std::string table_certificate(int j, int i_max) {
  return finish(header("table", Json{{"j", j}, {"i_max", i_max}}), table_payload(j, i_max));
}

std::string bernoulli_certificate(unsigned max_m) {
  return finish(header("bernoulli", Json{{"max_m", max_m}}), bernoulli_payload(max_m));
}

ReplayOutcome replay_certificate(std::string_view json_text, unsigned workers) {
  Json certificate;
  try {
    certificate = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate: not JSON: ") + e.what());
  }
  if (!certificate.is_object() || !certificate.contains("command") || !certificate.contains("parameters")) {
    throw std::invalid_argument("certificate: missing command or parameters");
  }
  const auto command = certificate["command"].get<std::string>();
  const Json& parameters = certificate["parameters"];

  Json payload;
  if (command == "verify") {
    PositivityRequest request;
    request.i_lo = parameter<int>(parameters, "i_lo");
    request.i_hi = parameter<int>(parameters, "i_hi");
    for (int j : parameter<std::vector<int>>(parameters, "j_list")) request.j_set.insert(j);
    request.strict = parameter<bool>(parameters, "strict");
    request.workers = workers;
    payload = verify_payload(verify_positivity(request));
  } else if (command == "table") {
    payload = table_payload(parameter<int>(parameters, "j"), parameter<int>(parameters, "i_max"));
  } else if (command == "bernoulli") {
    payload = bernoulli_payload(parameter<unsigned>(parameters, "max_m"));
  } else {
    throw std::invalid_argument("certificate: unknown command '" + command + "'");
  }

  ReplayOutcome outcome{command, true, {}};
  for (const auto& [key, value] : payload.items()) {
    if (!certificate.contains(key) || unordered(certificate[key]) != unordered(value)) {
      outcome.matches = false;
      if (!outcome.detail.empty()) outcome.detail += ",";
      outcome.detail += key;
    }
  }
  return outcome;
}

}  // namespace fanochern
