#pragma once

#include <cstdint>

#include "homnalg/error.hpp"

namespace homnalg {

/// Operation cap, default 10^7 basic bracket evaluations; overridable through
/// the HOMNALG_MAX_OPS environment variable (read once per process).
std::uint64_t max_ops();

/// Throws ResourceLimitError up front when a loop of `needed` basic
/// evaluations would exceed the cap.
void require_budget(std::uint64_t needed, const char* what);

/// Running counter for loops whose per-step cost is not known in advance.
class OpsCounter {
public:
  explicit OpsCounter(const char* what) : what_(what), cap_(max_ops()) {}
  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > cap_) throw ResourceLimitError(what_, used_, cap_);
  }
  std::uint64_t used() const { return used_; }

private:
  const char* what_;
  std::uint64_t used_ = 0;
  std::uint64_t cap_;
};

}  // namespace homnalg
