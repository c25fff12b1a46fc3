#include "rooklab/common.hpp"

#include <cstdlib>
#include <thread>

namespace rooklab {

std::int64_t binom(std::int64_t top, std::int64_t bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= bottom; ++i) {
    // exact at every step: result * (top - bottom + i) is divisible by i
    result = result * (top - bottom + i) / i;
  }
  return result;
}

std::int64_t factorial(int k) {
  std::int64_t result = 1;
  for (int i = 2; i <= k; ++i) result *= i;
  return result;
}

unsigned thread_count() {
  if (const char* env = std::getenv("ROOKLAB_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return static_cast<unsigned>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace rooklab
