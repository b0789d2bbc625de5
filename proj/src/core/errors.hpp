#pragma once

#include <stdexcept>
#include <string>

namespace sobq {

struct domain_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct zero_field_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct nonpositive_field_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct solver_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct classification_inversion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sobq
