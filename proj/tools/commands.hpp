#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cforge/io.hpp"

namespace cforge::cli {

/// Stable process exit codes.
enum ExitCode : int { ok = 0, usage = 1, failed = 2, parse_failure = 3, resource = 4 };

struct Options {
  std::string input;
  std::optional<int> max_degree;
  std::string variant = "full";
  std::string output = "json";
  std::optional<std::size_t> cap_rows;
  std::optional<std::size_t> cap_cols;
  std::uint64_t seed = 1;
  bool representatives = false;
  bool timing = true;
  // eval
  std::string expression;
  std::vector<std::string> cochain_maps;    // files holding {name: cochain}
  std::vector<std::string> named_cochains;  // name=file
  std::string out_file;
  // deform
  std::string first_order;
  bool mc = false;
};

int cmd_validate(const Options& o, Json& report);
int cmd_cohomology(const Options& o, Json& report);
int cmd_eval(const Options& o, Json& report);
int cmd_deform(const Options& o, Json& report);

/// Indented key/value rendering of a report.
std::string render_text(const Json& report);

/// Full command line handling; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cforge::cli
