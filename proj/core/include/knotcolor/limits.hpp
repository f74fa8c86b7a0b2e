#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotcolor {

// Zero means unlimited.
struct SearchLimits {
  uint64_t max_assignments = 100'000'000; // brute force / braid enumeration size
  uint64_t max_nodes = 0;                 // backtracking nodes, SAT decisions
  double max_seconds = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Polled by the engines every few thousand steps.
class Deadline {
public:
  explicit Deadline(const SearchLimits &limits)
      : nodes_(limits.max_nodes), seconds_(limits.max_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void charge_node(uint64_t count = 1) {
    used_ += count;
    if (nodes_ != 0 && used_ > nodes_)
      throw BudgetExceeded("node budget of " + std::to_string(nodes_) + " exceeded");
    if (seconds_ > 0 && (used_ & 0xfff) == 0)
      check_time();
  }

  void check_time() const {
    if (seconds_ > 0 && elapsed() > seconds_)
      throw BudgetExceeded("time budget of " + std::to_string(seconds_) + " s exceeded");
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  uint64_t used() const { return used_; }

private:
  uint64_t nodes_;
  double seconds_;
  uint64_t used_ = 0;
  std::chrono::steady_clock::time_point start_;
};

} // namespace knotcolor
