#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aic::cli {

// Bad command line: reported with usage text and exit code 2.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& what, std::string usage)
      : std::runtime_error(what), usage_(std::move(usage)) {}
  const std::string& usage() const { return usage_; }

 private:
  std::string usage_;
};

struct Command {
  std::string subcommand;  // ctm-build, ctm-show, bdm, entropy, sweep, graph-test
  bool help = false;
  std::string help_text;

  // ctm-build
  int states = 0;
  int symbols = 2;
  int dimension = 1;
  std::optional<std::uint64_t> cutoff;
  unsigned partitions = 1;
  std::optional<std::size_t> base;
  double completion_r = 1.0;
  std::optional<std::uint64_t> sample_stride;
  std::uint64_t seed = 0;
  std::string distribution_out;

  // shared
  std::string table;
  std::string input;
  std::string string_value;
  std::string out;
  int precision = 6;

  // ctm-show
  std::string show_block;

  // bdm
  std::size_t block = 0;
  std::size_t overlap = 0;  // offset m; 0 = block
  std::string boundary = "trim";
  std::string variant = "plain";
  std::string quadrants;
  std::string weights = "frequency";
  bool normalized = false;
  bool batch = false;

  // entropy
  std::size_t entropy_block = 1;
  bool overlapping = false;
  bool best = false;

  // sweep
  std::size_t length = 0;
  std::string configs;

  // graph-test
  std::string g1;
  std::string g2;
  bool line = false;
  std::size_t corpus = 0;
  std::string write_corpus;
};

// Throws UsageError on unknown flags, missing required options or bad values.
Command parse(const std::vector<std::string>& args);

// Runs a parsed command. Results go to `out` (or --out), progress to `err`.
// Returns 0 on success, 1 on computation errors (one line "error: ..." on
// `err`), 2 on usage errors detected while validating inputs.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

// parse + execute with exit-code mapping; what main() calls.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aic::cli
