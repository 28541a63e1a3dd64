#ifndef HARDYCEXP_VERIFY_HPP
#define HARDYCEXP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hardycexp {

struct CheckReport {
  std::string check;
  double residual;
  double tolerance;
  bool pass;

  std::string to_json() const;
};

// The full property suite of every module, deterministic for a fixed
// seed. Completes in well under five minutes.
std::vector<CheckReport> verify_all(std::uint64_t seed);

}  // namespace hardycexp

#endif
