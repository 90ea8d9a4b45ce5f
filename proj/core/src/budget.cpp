#include "coxcoh/budget.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace coxcoh {
namespace {

std::size_t initial_budget() {
  constexpr std::size_t kDefaultMb = 2048;
  if (const char* env = std::getenv("COXCOH_BUDGET_MB")) {
    char* end = nullptr;
    const unsigned long long mb = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && mb > 0) return static_cast<std::size_t>(mb) << 20;
  }
  return kDefaultMb << 20;
}

std::atomic<std::size_t>& budget() {
  static std::atomic<std::size_t> value{initial_budget()};
  return value;
}

}  // namespace

std::size_t matrix_budget_bytes() { return budget().load(); }

void set_matrix_budget_bytes(std::size_t bytes) { budget().store(bytes); }

void charge_matrix_bytes(std::size_t bytes, const std::string& what) {
  if (bytes > matrix_budget_bytes()) {
    throw BudgetExceeded(what + " needs " + std::to_string(bytes >> 20) + " MB, budget is " +
                         std::to_string(matrix_budget_bytes() >> 20) + " MB");
  }
}

}  // namespace coxcoh
