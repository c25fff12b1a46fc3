#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rooklab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a request exceeds the configured desk-scale budget.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

/// Raised when a closed form or generator is asked for parameters it does not cover.
class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

/// Binomial coefficient with the conventions used throughout the library:
/// a negative top or a bottom outside [0, top] gives 0.
std::int64_t binom(std::int64_t top, std::int64_t bottom);

std::int64_t factorial(int k);

/// Worker count for the parallel loops; honours ROOKLAB_THREADS.
unsigned thread_count();

}  // namespace rooklab
