#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace so2m::cli {

enum class Command { Verify, Tables, Involutions, Orientation, Aq, Cycles, Automorphic };
enum class Format { Json, Csv, Text };

struct RunConfig {
  int m = 0;
  Command command = Command::Tables;
  std::optional<int> table;    // 1..5, tables only
  Format format = Format::Text;
  std::string output;          // empty: write to `out`
  std::optional<int> bound;    // parabolic enumeration bound override
  std::vector<std::string> suites;  // verify only; empty means all
};

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

std::optional<Command> parse_command(const std::string& s);
std::optional<Format> parse_format(const std::string& s);
std::string to_string(Command c);

// Names accepted by verify --suite.
const std::vector<std::string>& suite_names();

// Writes the result to config.output or `out`, diagnostics to `err`, and
// returns kOk, kVerificationFailed or kUsage. Output is a pure function of
// the config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace so2m::cli
