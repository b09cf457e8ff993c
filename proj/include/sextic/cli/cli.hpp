#pragma once

// Job runner behind the command-line tool: JSON in, JSON out.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace sextic::cli {

enum class Command { Igusa, SatakeSextic, Phi, Fibration, Roundtrip, Theta, Predicates };

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

struct JobOptions {
  double tol = 1e-8;
  int theta_radius = 12;
  std::optional<std::string> out;
};

/// input is a single document, or {"jobs": [document, ...]} for a batch.
struct JobSpec {
  Command command = Command::Igusa;
  nlohmann::json input;
  JobOptions options;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitIdentity = 3;

struct JobResult {
  nlohmann::json output;
  int exit_code = kExitOk;
};

/// Malformed input; pointer is a JSON pointer to the offending field.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : std::runtime_error(what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// Never throws. Batches are evaluated concurrently and reported in input
/// order; the exit code is that of the first failing job.
JobResult run(const JobSpec& job);

/// Output serialization used by the tool: sorted keys, no whitespace unless
/// indent >= 0.
std::string dump(const nlohmann::json& doc, int indent = -1);

/// One "path<TAB>value" line per leaf.
std::string table(const nlohmann::json& doc);

}  // namespace sextic::cli
