#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace centext {

/// Size limits shared by the brute-force routines. These are configuration,
/// never hard-coded inside algorithms.
struct Limits {
  std::size_t max_group_order = 512;       // construction / closure
  std::size_t max_cohomology_order = 128;  // H^2 and everything built on it
  std::size_t max_isomorphism_order = 512;
};

using Clock = std::chrono::steady_clock;

/// Optional cooperative deadline; searches poll it between candidates.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(Clock::time_point when) : when_(when) {}
  static Deadline after_ms(long long ms) {
    return Deadline(Clock::now() + std::chrono::milliseconds(ms));
  }

  bool expired() const { return when_ && Clock::now() >= *when_; }
  void check(const char* what) const;

 private:
  std::optional<Clock::time_point> when_;
};

}  // namespace centext
