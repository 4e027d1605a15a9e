#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hua/partitions.hpp"

namespace hua::cli {

using Json = nlohmann::json;

/// Parses "1.3", "-0.4i", "1.3+0.2i", "2e-3-1e-2i" (a trailing j is also accepted).
/// Throws Error(invalid_argument).
Complex parse_complex(std::string_view text);

/// Comma-separated reals, e.g. "0.2,0.5".
std::vector<double> parse_real_list(std::string_view text);

/// Comma-separated integers, e.g. "2,0,-1".
std::vector<int> parse_int_list(std::string_view text);

/// Typed access to a flat experiment config. Values may be JSON numbers,
/// strings in the CLI syntax, or arrays. Every value read (defaults
/// included) is recorded so the report can echo the effective config.
class Config {
 public:
  explicit Config(Json raw);

  bool has(const std::string& key) const;
  std::string command() const;

  double real(const std::string& key, double fallback);
  double real(const std::string& key);
  int integer(const std::string& key, int fallback);
  int integer(const std::string& key);
  std::int64_t int64(const std::string& key, std::int64_t fallback);
  std::uint64_t u64(const std::string& key, std::uint64_t fallback);
  Complex complex(const std::string& key, Complex fallback);
  Complex complex(const std::string& key);
  std::vector<double> reals(const std::string& key);
  std::vector<int> integers(const std::string& key);
  std::string string(const std::string& key, const std::string& fallback);

  /// Throws Error(invalid_argument) naming any key that was never read.
  /// Shared run settings (seed, samples, kmax, tol, h, workers) are exempt.
  void reject_unknown() const;

  const Json& effective() const { return effective_; }

 private:
  const Json& require(const std::string& key) const;

  Json raw_;
  Json effective_;
};

enum class OutputFormat { json, csv, text };

OutputFormat parse_output_format(std::string_view name);

/// Default seed used when none is given.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedull;

/// Runs one experiment described by a flat config with a "command" key.
/// Returns the report; module errors propagate as hua::Error.
Json run_command(const Json& config);

/// Runs a list of experiments; entries that throw are recorded with
/// status "error". `defaults` fills keys an entry does not set.
Json run_suite(const Json& experiments, const Json& defaults);

/// 0 pass, 1 fail, 2 non-convergence, 3 invalid arguments.
int exit_code(const Json& report);

std::string render(const Json& report, OutputFormat format);

/// Entry point of the command-line tool.
int main(int argc, char** argv);

std::string version();

}  // namespace hua::cli
