#pragma once

#include <stdexcept>
#include <string>

namespace geonf {

// Small divisors, precision exhaustion, factorial budget: the computation refused to continue.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stated postcondition or input property did not hold within tolerance.
class CheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geonf
