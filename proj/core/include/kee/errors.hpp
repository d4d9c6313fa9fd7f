#pragma once

#include <stdexcept>
#include <string>

namespace kee {

// The class has no Zariski decomposition supported on the candidate curves.
class NotPseudoeffective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A volume curve would end at an irrational point.
class IrrationalThreshold : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The log anticanonical class is not ample for the requested angles.
class OutsideAmpleRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two independent computations disagree, or a certified post-condition
// failed. Always a bug or a mathematical error, never a user error.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kee
