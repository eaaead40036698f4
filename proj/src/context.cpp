#include "flatcheck/context.hpp"

#include "flatcheck/errors.hpp"

namespace flatcheck {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;
thread_local EngineStats* t_stats = nullptr;
}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::duration budget) : previous_(t_deadline) {
  const auto candidate = std::chrono::steady_clock::now() + budget;
  if (!t_deadline || candidate < *t_deadline) t_deadline = candidate;
}

ScopedDeadline::~ScopedDeadline() { t_deadline = previous_; }

void check_deadline() {
  if (t_deadline && std::chrono::steady_clock::now() > *t_deadline)
    throw TimeoutError("computation exceeded the time limit");
}

StatsScope::StatsScope(EngineStats& sink) : previous_(t_stats) { t_stats = &sink; }

StatsScope::~StatsScope() { t_stats = previous_; }

EngineStats* current_stats() { return t_stats; }

}  // namespace flatcheck
