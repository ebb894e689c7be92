#pragma once

#include <span>
#include <string>
#include <vector>

#include "cayley/value.hpp"

namespace cayley {

/// Label sequence emitted while interpreting an effectful computation.
using Trace = std::vector<std::string>;

/// What a computation looks like from the outside: the canonical encoding of
/// its fully forced result plus the effect labels it emitted, in order.
struct Observation {
  std::string value;
  Trace trace;

  friend bool operator==(const Observation&, const Observation&) = default;

  /// Human readable form used in counterexample messages.
  std::string describe() const;
};

/// A pure value: no trace.
Observation observe(const Value& v);

/// A value with an explicit trace.
Observation observe(const Value& v, Trace trace);

/// Tabulate a function over `probes`; the value is the list of outputs.
Observation observe(const Fn& f, std::span<const Value> probes);

/// Combine per-point observations into one, keeping every point's trace
/// separate so that effect order at each probe stays visible.
Observation tabulate(std::span<const Observation> points);

}  // namespace cayley
