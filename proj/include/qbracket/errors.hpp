#pragma once

#include <stdexcept>

namespace qbracket {

// Usage errors throw. Identity verification failures never throw -- they are
// recorded in a VerificationReport instead.

// Two series of different truncation order were combined.
struct order_mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A function table (or statistic vector) does not reach the requested index.
struct table_too_short_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A parameter outside the supported domain (e.g. negative alpha).
struct unsupported_parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A malformed identity case (e.g. missing alpha, oracle bound > fast bound).
struct invalid_case_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qbracket
