#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "fanochern/certificate.hpp"
#include "fanochern/chern_calculus.hpp"
#include "fanochern/coefficients.hpp"
#include "fanochern/fano_invariants.hpp"
#include "fanochern/render.hpp"
#include "json.hpp"

namespace fanochern::cli {

namespace {

constexpr const char* kModelGrammar =
    "Model specs: P:n (projective space), Q:n (quadric, n>=3), "
    "Bl:n,m (blow-up of P^n along a linear m-space, 0<=m<=n-1), QxP:m (Q^(m+1) x P^m)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format;
  std::string out_path;
};

// Opens the destination up front so an unwritable path fails before any work.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (path.empty()) return;
    file_.emplace(path, std::ios::out | std::ios::trunc);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    path_ = path;
  }

  void write(const std::string& text) {
    std::ostream& os = file_ ? static_cast<std::ostream&>(*file_) : fallback_;
    os << text;
    os.flush();
    if (!os) throw IoError("write failed" + (path_.empty() ? std::string() : " for '" + path_ + "'"));
  }

 private:
  std::ostream& fallback_;
  std::optional<std::ofstream> file_;
  std::string path_;
};

OutputFormat resolve_format(const GlobalOptions& global, OutputFormat fallback) {
  if (global.format.empty()) return fallback;
  try {
    return parse_output_format(global.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  Sink sink(path, std::cerr);
  sink.write(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string join(const std::set<int>& values) {
  std::string out;
  for (int v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

std::string verify_summary(const PositivityReport& report) {
  std::ostringstream os;
  os << "verify i=" << report.i_lo << ".." << report.i_hi << " j={" << join(report.j_set) << "} "
     << (report.strict ? "strict" : "non-strict") << ": " << report.coefficients_checked
     << " coefficients checked, " << report.violations.size() << " violation"
     << (report.violations.size() == 1 ? "" : "s") << " (" << std::fixed << std::setprecision(2)
     << report.elapsed.count() << " s)\n";
  for (const auto& v : report.violations) os << "violation b_" << v.index.str() << " = " << v.value.str() << "\n";
  for (const auto& p : report.patterns) {
    os << "observed " << p.name << ": " << p.description << " on " << p.matched << "/" << p.checked << " rows\n";
  }
  return os.str();
}

std::string invariants_report(const ModelFamily& family, OutputFormat format) {
  const auto pair = example_invariants(family);
  const bool known = has_known_polarized_family(family);
  const std::string polarized = known ? example_polarized_family(family).str() : "not stated in source";
  if (format == OutputFormat::json) {
    nlohmann::ordered_json out{{"model", family.str()},
                               {"ambient_dimension", family.ambient_dimension()},
                               {"n_lower", pair.n_lower},
                               {"n_upper", pair.n_upper},
                               {"polarized_family", known ? nlohmann::ordered_json(polarized) : nullptr}};
    return out.dump() + "\n";
  }
  if (format == OutputFormat::csv) {
    return "model,ambient_dimension,n_lower,n_upper,polarized_family\n" + family.str() + "," +
           std::to_string(family.ambient_dimension()) + "," + std::to_string(pair.n_lower) + "," +
           std::to_string(pair.n_upper) + ",\"" + polarized + "\"\n";
  }
  if (format == OutputFormat::tex) {
    return "$\\underline{N}_X = " + std::to_string(pair.n_lower) + "$, $\\overline{N}_X = " +
           std::to_string(pair.n_upper) + "$\n";
  }
  std::ostringstream os;
  os << "model " << family.str() << " (dimension " << family.ambient_dimension() << ")\n";
  os << "N_lower = " << pair.n_lower << ", N_upper = " << pair.n_upper << "\n";
  os << "(H, L) = " << (known ? "(" + polarized + ")" : polarized) << "\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bernoulli, b_(i,j,k) and Chern-character computations for chains of minimal families",
               "fanochern"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(kModelGrammar);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: csv, json, tex (text for expand/verify/invariants)");
  app.add_option("--out", global.out_path, "Write output (verify: the certificate) to PATH");

  unsigned max_m = 10;
  std::string bernoulli_certificate_path;
  auto* bernoulli_cmd = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_max_m");
  bernoulli_cmd->add_option("max_m", max_m, "Largest index")->check(CLI::NonNegativeNumber);
  bernoulli_cmd->add_option("--certificate", bernoulli_certificate_path, "Also write a replayable certificate");

  int table_j = 1;
  int table_i_max = 6;
  bool c_table = false;
  int m_max = 6;
  int p_max = 6;
  std::string table_certificate_path;
  auto* table_cmd = app.add_subcommand("table", "Rows i=1..i_max of b_(i,j,k), or the c_(m,p) table");
  table_cmd->add_option("-j,--j", table_j, "Chern degree j")->check(CLI::PositiveNumber);
  table_cmd->add_option("--i-max", table_i_max, "Largest chain depth")->check(CLI::PositiveNumber);
  table_cmd->add_flag("--c-table", c_table, "Emit c_(m,p) instead of b_(i,j,k)");
  table_cmd->add_option("--m-max", m_max, "Largest m for --c-table")->check(CLI::PositiveNumber);
  table_cmd->add_option("--p-max", p_max, "Largest p for --c-table")->check(CLI::PositiveNumber);
  table_cmd->add_option("--certificate", table_certificate_path, "Also write a replayable certificate");

  int verify_i_min = 1;
  int verify_i_max = 99;
  std::vector<int> verify_j{1, 2};
  bool non_strict = false;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  auto* verify_cmd = app.add_subcommand("verify", "Check b_(i,j,k) > 0 for 1 <= k <= i+j over a range");
  verify_cmd->add_option("--i-min", verify_i_min, "Smallest i")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--i-max", verify_i_max, "Largest i")->check(CLI::PositiveNumber);
  verify_cmd->add_option("-j,--j", verify_j, "Comma-separated Chern degrees")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--non-strict", non_strict, "Only flag negative values (allow zeros)");
  verify_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  std::string a_list;
  int expand_j = 1;
  auto* expand_cmd = app.add_subcommand("expand", "Expand ch_j(H_i) over the symbols of X");
  expand_cmd->add_option("-a,--a", a_list, "Comma-separated a_2,...,a_i (empty for H_1)");
  expand_cmd->add_option("-j,--j", expand_j, "Chern degree j")->check(CLI::PositiveNumber);

  std::string model_spec;
  auto* invariants_cmd = app.add_subcommand("invariants", "Chain-length invariants of a model Fano manifold");
  invariants_cmd->add_option("model", model_spec, kModelGrammar)->required();

  std::string replay_path;
  unsigned replay_workers = std::max(1u, std::thread::hardware_concurrency());
  auto* replay_cmd = app.add_subcommand("replay", "Rerun a certificate and compare its result payload");
  replay_cmd->add_option("certificate", replay_path, "Certificate JSON file")->required();
  replay_cmd->add_option("--workers", replay_workers, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*bernoulli_cmd) {
      const auto format = resolve_format(global, OutputFormat::csv);
      Sink sink(global.out_path, out);
      sink.write(render_bernoulli_table(max_m, format));
      if (!bernoulli_certificate_path.empty()) write_file(bernoulli_certificate_path, bernoulli_certificate(max_m));
      return kSuccess;
    }

    if (*table_cmd) {
      const auto format = resolve_format(global, OutputFormat::csv);
      Sink sink(global.out_path, out);
      sink.write(c_table ? render_c_table(m_max, p_max, format) : render_b_table(table_j, table_i_max, format));
      if (!table_certificate_path.empty() && !c_table) {
        write_file(table_certificate_path, table_certificate(table_j, table_i_max));
      }
      return kSuccess;
    }

    if (*verify_cmd) {
      const auto format = resolve_format(global, OutputFormat::text);
      if (verify_i_min > verify_i_max) throw UsageError("--i-min must not exceed --i-max");
      std::optional<Sink> certificate_sink;
      if (!global.out_path.empty()) certificate_sink.emplace(global.out_path, out);

      PositivityRequest request;
      request.i_lo = verify_i_min;
      request.i_hi = verify_i_max;
      request.j_set = {verify_j.begin(), verify_j.end()};
      request.strict = !non_strict;
      request.workers = workers;
      const auto report = verify_positivity(request);
      const auto certificate = verify_certificate(report);

      out << (format == OutputFormat::json ? certificate : verify_summary(report));
      if (certificate_sink) certificate_sink->write(certificate);
      return report.verified() ? kSuccess : kViolations;
    }

    if (*expand_cmd) {
      const auto format = resolve_format(global, OutputFormat::text);
      ChainConfig config;
      try {
        config = ChainConfig::parse(a_list);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Sink sink(global.out_path, out);
      sink.write(render_formal_class(expand_chain(config, expand_j), format));
      return kSuccess;
    }

    if (*invariants_cmd) {
      const auto format = resolve_format(global, OutputFormat::text);
      std::optional<ModelFamily> family;
      try {
        family = ModelFamily::parse(model_spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Sink sink(global.out_path, out);
      sink.write(invariants_report(*family, format));
      return kSuccess;
    }

    if (*replay_cmd) {
      ReplayOutcome outcome;
      try {
        outcome = replay_certificate(read_file(replay_path), replay_workers);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (outcome.matches) {
        out << "replay " << outcome.command << ": payload reproduced\n";
        return kSuccess;
      }
      out << "replay " << outcome.command << ": payload differs in " << outcome.detail << "\n";
      return kViolations;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fanochern::cli
