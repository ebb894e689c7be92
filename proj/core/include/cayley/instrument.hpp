#pragma once

// Deterministic operation counting. Constructors of the structures whose
// asymptotics matter (cons cells, free-structure nodes, composed post
// functions) call tick(); tests and the bench harness read the counter
// instead of a clock.

#include <cstdint>

namespace cayley::instrument {

namespace detail {
inline thread_local std::uint64_t counter = 0;
}

inline void tick(std::uint64_t n = 1) noexcept { detail::counter += n; }

inline std::uint64_t ticks() noexcept { return detail::counter; }

/// Counts ticks on this thread since construction.
class Scope {
 public:
  Scope() noexcept : start_(ticks()) {}
  std::uint64_t elapsed() const noexcept { return ticks() - start_; }

 private:
  std::uint64_t start_;
};

}  // namespace cayley::instrument
