#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aic/symbol_array.hpp"

namespace aic {

// Raised when a rule space has no known halting bound and no explicit
// cutoff was supplied.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The set of all (t,k) machines in the Busy Beaver formalism: every
// (state, read-symbol) cell chooses a written symbol, a head move and a
// next state (or HALT). dimension 2 gives a single-head turmite on an
// unbounded grid with four moves.
struct RuleSpace {
  int states = 2;
  int symbols = 2;
  int dimension = 1;

  int moves() const { return dimension == 1 ? 2 : 4; }
  int cells() const { return states * symbols; }
  // Choices per cell: symbols * moves * (states + 1).
  std::uint64_t rules_per_cell() const;
  // (rules_per_cell)^(states*symbols); throws std::overflow_error past 2^64.
  std::uint64_t machine_count() const;

  void validate() const;

  friend bool operator==(const RuleSpace&, const RuleSpace&) = default;
};

enum class Move : std::uint8_t { Left = 0, Right = 1, Up = 2, Down = 3 };

inline constexpr int kHalt = 0;  // next-state value for HALT; states are 1..t

struct Rule {
  Symbol write = 0;
  Move move = Move::Left;
  int next = 1;

  friend bool operator==(const Rule&, const Rule&) = default;
};

class TuringMachine {
 public:
  TuringMachine(RuleSpace space, std::vector<Rule> rules);

  const RuleSpace& space() const { return space_; }
  const Rule& rule(int state, Symbol read) const {
    return rules_[static_cast<std::size_t>((state - 1) * space_.symbols + read)];
  }
  const std::vector<Rule>& rules() const { return rules_; }

  friend bool operator==(const TuringMachine&, const TuringMachine&) = default;

 private:
  RuleSpace space_;
  std::vector<Rule> rules_;
};

// Canonical mixed-radix bijection between [0, machine_count) and machines.
// Each cell's rule is numbered lexicographically by (write, move, next) with
// moves ordered L,R(,U,D) and HALT after state t. Cell (1,0) is the most
// significant digit, then (1,1), ..., (t,k-1).
TuringMachine machine_from_index(const RuleSpace& space, std::uint64_t index);
std::uint64_t index_of(const TuringMachine& machine);

// Symbol relabelling s -> k-1-s applied to reads and writes.
TuringMachine complement_machine(const TuringMachine& machine);
// Swaps L<->R in every rule (and U<->D in 2D).
TuringMachine mirror_machine(const TuringMachine& machine);

struct SimulationResult {
  bool halted = false;
  std::uint64_t steps = 0;
  // Contents of the smallest contiguous region (interval in 1D, bounding
  // rectangle in 2D) containing every cell the head read, captured at halt.
  // Empty when the machine did not halt.
  SymbolArray output;

  friend bool operator==(const SimulationResult&, const SimulationResult&) = default;
};

// Reusable simulator with scratch tape sized for a fixed cutoff. Not
// thread-safe; use one per thread.
class Simulator {
 public:
  Simulator(const RuleSpace& space, std::uint64_t cutoff);

  // Runs from state 1 on a tape filled with `blank`.
  SimulationResult run(const TuringMachine& machine, Symbol blank = 0);

  // Fast path used by enumeration: decodes `index` in place and returns the
  // output key (or std::nullopt when the run does not halt).
  std::optional<std::string> run_index(std::uint64_t index, Symbol blank = 0);

  std::uint64_t cutoff() const { return cutoff_; }

 private:
  struct Outcome {
    bool halted;
    std::uint64_t steps;
  };
  Outcome execute(const Rule* rules, Symbol blank);
  void reset();

  RuleSpace space_;
  std::uint64_t cutoff_;
  std::size_t width_;  // grid side (1D: tape length)
  std::vector<Symbol> tape_;
  std::vector<std::uint32_t> touched_;
  std::vector<Rule> scratch_rules_;
  long lo_row_ = 0, hi_row_ = 0, lo_col_ = 0, hi_col_ = 0;
  Symbol blank_ = 0;
};

SimulationResult run(const TuringMachine& machine, std::uint64_t cutoff, Symbol blank = 0);

// Known Busy Beaver step bounds for 1D two-symbol spaces: (2,2)->6,
// (3,2)->21, (4,2)->107. An override always wins.
std::uint64_t halting_cutoff(const RuleSpace& space,
                             std::optional<std::uint64_t> override_cutoff = std::nullopt);

}  // namespace aic
