#include "zetalab/parallel.hpp"

#include <atomic>

namespace zetalab {

namespace {
std::atomic<int>& thread_setting() {
  static std::atomic<int> value{static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))};
  return value;
}
}  // namespace

void set_thread_count(int threads) { thread_setting() = std::max(1, threads); }

int thread_count() { return thread_setting(); }

}  // namespace zetalab
