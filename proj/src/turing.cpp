#include "aic/turing.hpp"

#include <limits>
#include <string>

namespace aic {

namespace {

constexpr Symbol kUnwritten = 0xFF;
// Grid side limit for 2D scratch space (cells = side^2).
constexpr std::uint64_t kMaxGridSide = 8193;

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error("rule space size exceeds 2^64");
    }
    result *= base;
  }
  return result;
}

Rule decode_rule(const RuleSpace& space, std::uint64_t digit) {
  const auto next_choices = static_cast<std::uint64_t>(space.states + 1);
  const auto moves = static_cast<std::uint64_t>(space.moves());
  const auto next_digit = static_cast<int>(digit % next_choices);
  digit /= next_choices;
  Rule rule;
  rule.move = static_cast<Move>(digit % moves);
  rule.write = static_cast<Symbol>(digit / moves);
  rule.next = next_digit == space.states ? kHalt : next_digit + 1;
  return rule;
}

std::uint64_t encode_rule(const RuleSpace& space, const Rule& rule) {
  const auto next_digit = static_cast<std::uint64_t>(rule.next == kHalt ? space.states
                                                                        : rule.next - 1);
  return (static_cast<std::uint64_t>(rule.write) * static_cast<std::uint64_t>(space.moves()) +
          static_cast<std::uint64_t>(rule.move)) *
             static_cast<std::uint64_t>(space.states + 1) +
         next_digit;
}

void decode_into(const RuleSpace& space, std::uint64_t index, Rule* rules) {
  const std::uint64_t per_cell = space.rules_per_cell();
  for (int cell = space.cells() - 1; cell >= 0; --cell) {
    rules[cell] = decode_rule(space, index % per_cell);
    index /= per_cell;
  }
}

}  // namespace

std::uint64_t RuleSpace::rules_per_cell() const {
  return static_cast<std::uint64_t>(symbols) * static_cast<std::uint64_t>(moves()) *
         static_cast<std::uint64_t>(states + 1);
}

std::uint64_t RuleSpace::machine_count() const {
  validate();
  return checked_pow(rules_per_cell(), cells());
}

void RuleSpace::validate() const {
  if (states < 1) throw std::invalid_argument("rule space needs at least 1 state");
  if (symbols < 2 || symbols > kMaxSymbols) {
    throw std::invalid_argument("rule space needs between 2 and " +
                                std::to_string(kMaxSymbols) + " symbols");
  }
  if (dimension != 1 && dimension != 2) {
    throw std::invalid_argument("rule space dimension must be 1 or 2");
  }
}

TuringMachine::TuringMachine(RuleSpace space, std::vector<Rule> rules)
    : space_(space), rules_(std::move(rules)) {
  space_.validate();
  if (rules_.size() != static_cast<std::size_t>(space_.cells())) {
    throw std::invalid_argument("transition table must cover every (state, symbol) cell");
  }
  for (const Rule& r : rules_) {
    if (r.write >= space_.symbols) throw std::invalid_argument("written symbol out of range");
    if (static_cast<int>(r.move) >= space_.moves()) {
      throw std::invalid_argument("head move not available in this dimension");
    }
    if (r.next < 0 || r.next > space_.states) {
      throw std::invalid_argument("next state out of range");
    }
  }
}

TuringMachine machine_from_index(const RuleSpace& space, std::uint64_t index) {
  const std::uint64_t total = space.machine_count();
  if (index >= total) {
    throw std::out_of_range("machine index " + std::to_string(index) +
                            " out of range; space has " + std::to_string(total) +
                            " machines");
  }
  std::vector<Rule> rules(static_cast<std::size_t>(space.cells()));
  decode_into(space, index, rules.data());
  return TuringMachine(space, std::move(rules));
}

std::uint64_t index_of(const TuringMachine& machine) {
  const RuleSpace& space = machine.space();
  const std::uint64_t per_cell = space.rules_per_cell();
  std::uint64_t index = 0;
  for (const Rule& rule : machine.rules()) index = index * per_cell + encode_rule(space, rule);
  return index;
}

TuringMachine complement_machine(const TuringMachine& machine) {
  const RuleSpace& space = machine.space();
  const auto k = static_cast<Symbol>(space.symbols);
  std::vector<Rule> rules(machine.rules().size());
  for (int state = 1; state <= space.states; ++state) {
    for (Symbol read = 0; read < k; ++read) {
      Rule r = machine.rule(state, read);
      r.write = static_cast<Symbol>(k - 1 - r.write);
      rules[static_cast<std::size_t>((state - 1) * k + (k - 1 - read))] = r;
    }
  }
  return TuringMachine(space, std::move(rules));
}

TuringMachine mirror_machine(const TuringMachine& machine) {
  std::vector<Rule> rules = machine.rules();
  for (Rule& r : rules) {
    switch (r.move) {
      case Move::Left: r.move = Move::Right; break;
      case Move::Right: r.move = Move::Left; break;
      case Move::Up: r.move = Move::Down; break;
      case Move::Down: r.move = Move::Up; break;
    }
  }
  return TuringMachine(machine.space(), std::move(rules));
}

Simulator::Simulator(const RuleSpace& space, std::uint64_t cutoff)
    : space_(space), cutoff_(cutoff) {
  space_.validate();
  if (cutoff == 0) throw std::invalid_argument("cutoff must be positive");
  const std::uint64_t side = 2 * cutoff + 1;
  if (space_.dimension == 2 && side > kMaxGridSide) {
    throw ConfigurationError("2D cutoff " + std::to_string(cutoff) +
                             " exceeds the simulator grid limit");
  }
  width_ = static_cast<std::size_t>(side);
  tape_.assign(space_.dimension == 1 ? width_ : width_ * width_, kUnwritten);
  touched_.reserve(static_cast<std::size_t>(cutoff) + 1);
  scratch_rules_.resize(static_cast<std::size_t>(space_.cells()));
}

void Simulator::reset() {
  for (std::uint32_t cell : touched_) tape_[cell] = kUnwritten;
  touched_.clear();
}

Simulator::Outcome Simulator::execute(const Rule* rules, Symbol blank) {
  reset();
  blank_ = blank;
  const long centre = static_cast<long>(cutoff_);
  long row = space_.dimension == 1 ? 0 : centre;
  long col = centre;
  lo_row_ = hi_row_ = row;
  lo_col_ = hi_col_ = col;
  const long stride = static_cast<long>(width_);
  const int k = space_.symbols;
  int state = 1;
  for (std::uint64_t step = 1; step <= cutoff_; ++step) {
    const auto cell = static_cast<std::uint32_t>(row * stride + col);
    Symbol read = tape_[cell];
    if (read == kUnwritten) {
      read = blank;
      touched_.push_back(cell);
    }
    if (col < lo_col_) lo_col_ = col;
    if (col > hi_col_) hi_col_ = col;
    if (row < lo_row_) lo_row_ = row;
    if (row > hi_row_) hi_row_ = row;
    const Rule& r = rules[(state - 1) * k + read];
    tape_[cell] = r.write;
    switch (r.move) {
      case Move::Left: --col; break;
      case Move::Right: ++col; break;
      case Move::Up: --row; break;
      case Move::Down: ++row; break;
    }
    if (r.next == kHalt) return {true, step};
    state = r.next;
  }
  return {false, cutoff_};
}

SimulationResult Simulator::run(const TuringMachine& machine, Symbol blank) {
  if (!(machine.space() == space_)) {
    throw std::invalid_argument("machine does not belong to the simulator's rule space");
  }
  if (blank >= space_.symbols) throw std::invalid_argument("blank symbol out of range");
  const Outcome outcome = execute(machine.rules().data(), blank);
  SimulationResult result;
  result.halted = outcome.halted;
  result.steps = outcome.steps;
  if (!outcome.halted) return result;
  const auto rows = static_cast<std::size_t>(hi_row_ - lo_row_ + 1);
  const auto cols = static_cast<std::size_t>(hi_col_ - lo_col_ + 1);
  std::vector<Symbol> cells;
  cells.reserve(rows * cols);
  for (long r = lo_row_; r <= hi_row_; ++r) {
    for (long c = lo_col_; c <= hi_col_; ++c) {
      const Symbol s = tape_[static_cast<std::size_t>(r * static_cast<long>(width_) + c)];
      cells.push_back(s == kUnwritten ? blank : s);
    }
  }
  result.output = space_.dimension == 1 ? SymbolArray({cols}, std::move(cells))
                                        : SymbolArray({rows, cols}, std::move(cells));
  return result;
}

std::optional<std::string> Simulator::run_index(std::uint64_t index, Symbol blank) {
  decode_into(space_, index, scratch_rules_.data());
  const Outcome outcome = execute(scratch_rules_.data(), blank);
  if (!outcome.halted) return std::nullopt;
  std::string key;
  const long rows = hi_row_ - lo_row_ + 1;
  const long cols = hi_col_ - lo_col_ + 1;
  if (space_.dimension == 2) {
    key = std::to_string(rows) + "x" + std::to_string(cols) + ":";
  }
  key.reserve(key.size() + static_cast<std::size_t>(rows * cols));
  for (long r = lo_row_; r <= hi_row_; ++r) {
    for (long c = lo_col_; c <= hi_col_; ++c) {
      const Symbol s = tape_[static_cast<std::size_t>(r * static_cast<long>(width_) + c)];
      key.push_back(static_cast<char>('0' + (s == kUnwritten ? blank : s)));
    }
  }
  return key;
}

SimulationResult run(const TuringMachine& machine, std::uint64_t cutoff, Symbol blank) {
  Simulator sim(machine.space(), cutoff);
  return sim.run(machine, blank);
}

std::uint64_t halting_cutoff(const RuleSpace& space,
                             std::optional<std::uint64_t> override_cutoff) {
  if (override_cutoff) {
    if (*override_cutoff == 0) throw ConfigurationError("cutoff must be positive");
    return *override_cutoff;
  }
  if (space.dimension == 1 && space.symbols == 2) {
    switch (space.states) {
      case 1: return 1;
      case 2: return 6;
      case 3: return 21;
      case 4: return 107;
      default: break;
    }
  }
  throw ConfigurationError("cutoff required: no known halting bound for (" +
                           std::to_string(space.states) + "," +
                           std::to_string(space.symbols) + ") dimension " +
                           std::to_string(space.dimension));
}

}  // namespace aic
