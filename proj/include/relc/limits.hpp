#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relc {

// Soft resource guards threaded through every search. A capped run raises
// limit_exceeded instead of returning a wrong or partial answer.
struct Limits {
  std::uint64_t max_nodes = 200'000'000;   // search states, closure elements
  std::uint64_t max_tuples = 20'000'000;   // enumerated tuples in orbit computations
};

class limit_exceeded : public std::runtime_error {
 public:
  explicit limit_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t cap;
  const char* label;

  Budget(std::uint64_t cap_, const char* label_) : cap(cap_), label(label_) {}

  void spend(std::uint64_t k = 1) {
    used += k;
    if (used > cap) throw limit_exceeded(std::string(label) + ": node limit exceeded");
  }
};

}  // namespace relc
