#pragma once

#include <stdexcept>
#include <string>

namespace distcomm {

// Malformed or inconsistent input: bad records, unknown journals, invalid
// arguments. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well-formed but carries no analyzable mass (empty corpus, empty
// vocabulary, zero-total cube). Maps to CLI exit code 2.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace distcomm
