#pragma once

#include <stdexcept>
#include <string>

namespace loadcomp
{

/// Bad input data: malformed files, invariant violations, degenerate
/// arguments. The CLI maps this to exit status 1.
class InputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Failure reading or writing a file. The CLI maps this to exit status 2.
class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace loadcomp
