#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace acg {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: group specs, words, cycle notation, CLI values.
class SpecError : public Error
{
public:
  using Error::Error;
};

/// Operation applied to elements of different realizations (e.g. a
/// permutation times a matrix, or matrices over different primes).
class TypeError : public Error
{
public:
  using Error::Error;
};

/// A documented precondition does not hold (tuple is not a vertex, M is
/// not normal, ...). Distinct from search exhaustion, which is reported
/// through return values.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// A brute-force cap was exceeded. Never silently truncated.
class ResourceError : public Error
{
public:
  ResourceError(std::string cap, std::uint64_t limit, std::uint64_t requested)
    : Error("resource cap '" + cap + "' exceeded: requested " + std::to_string(requested) +
            ", limit " + std::to_string(limit)),
      cap_(std::move(cap)), limit_(limit), requested_(requested)
  {}

  const std::string& cap() const { return cap_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t requested() const { return requested_; }

private:
  std::string cap_;
  std::uint64_t limit_;
  std::uint64_t requested_;
};

} // namespace acg
