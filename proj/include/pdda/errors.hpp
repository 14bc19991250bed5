#pragma once

#include <stdexcept>

namespace pdda {

// Invalid input or a violated operation precondition.
class value_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured budget was exhausted (S-pair cap, nilpotence cap, exponent
// range). Never silent: callers either handle or abort loudly.
class resource_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pdda
