#include "homnalg/budget.hpp"

#include <cstdlib>
#include <string>

namespace homnalg {

std::uint64_t max_ops() {
  static const std::uint64_t cap = [] {
    const char* env = std::getenv("HOMNALG_MAX_OPS");
    if (env && *env) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(10'000'000);
  }();
  return cap;
}

void require_budget(std::uint64_t needed, const char* what) {
  if (needed > max_ops()) throw ResourceLimitError(what, needed, max_ops());
}

}  // namespace homnalg
