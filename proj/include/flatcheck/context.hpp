#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace flatcheck {

/// Counters accumulated by the Gröbner engine while a StatsScope is active.
struct EngineStats {
  std::size_t groebner_calls = 0;
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
  std::size_t largest_input = 0;
};

/// Installs a per-thread deadline checked by long-running engine loops.
/// Nested scopes keep the earlier deadline.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::steady_clock::duration budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

/// Throws TimeoutError if the current thread's deadline has passed.
void check_deadline();

/// Routes engine counters of the current thread into `sink`.
class StatsScope {
 public:
  explicit StatsScope(EngineStats& sink);
  ~StatsScope();
  StatsScope(const StatsScope&) = delete;
  StatsScope& operator=(const StatsScope&) = delete;

 private:
  EngineStats* previous_;
};

/// Current sink or null.
EngineStats* current_stats();

}  // namespace flatcheck
