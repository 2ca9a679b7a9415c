#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynrefl/algebra.hpp"

namespace dynrefl {

struct Axis {
  std::string name;
  std::vector<std::string> labels;
};

/// A universally quantified equation over finite axes. `holds` is evaluated
/// at every point; `sides` renders both sides for reporting and is only
/// called on failure.
struct Identity {
  std::string id;
  std::vector<Axis> axes;
  std::function<bool(const Index*)> holds;
  std::function<std::pair<std::string, std::string>(const Index*)> sides;
  /// When true the first axis is the dynamical parameter.
  bool lambda_first = true;

  std::uint64_t points() const;
};

struct Witness {
  std::string check;
  std::optional<std::string> lambda;
  std::vector<std::string> inputs;
  std::string lhs, rhs;
  std::vector<Index> point;
};

struct CheckResult {
  std::string check;
  bool passed = true;
  std::uint64_t tuples = 0;
  std::optional<Witness> witness;
  double wall_ms = 0.0;
};

/// Exhaustive sweep. The reported witness is the lexicographically least
/// failing point regardless of the number of workers.
CheckResult run_check(const Identity& id);

/// A result that holds trivially without a sweep, or fails with a note.
CheckResult fact(const std::string& id, bool passed, const std::string& note = "");

/// Map a witness back to a point of `id`. Throws UnknownLabel.
std::vector<Index> locate(const Identity& id, const std::optional<std::string>& lambda,
                          const std::vector<std::string>& inputs);

/// True iff the identity still fails at the witness point.
bool replay(const Identity& id, const Witness& w);

void set_workers(unsigned n);
/// Explicit setting, else DYNREFL_WORKERS, else hardware concurrency.
unsigned workers();

}  // namespace dynrefl
