#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace brim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, out-of-range parameters, rank-deficient input.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A stated precondition of an operation does not hold for its arguments.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// Truncation cap, generator count cap or stabilization window exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class PresentationUnavailable : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

// Randomized routes disagree; retrying with a fresh seed is the remedy.
class GenericityError : public Error {
 public:
  GenericityError(const std::string& what, std::vector<std::uint64_t> seeds)
      : Error(what + seed_suffix(seeds)), seeds_(std::move(seeds)) {}
  const std::vector<std::uint64_t>& seeds() const noexcept { return seeds_; }

 private:
  static std::string seed_suffix(const std::vector<std::uint64_t>& seeds) {
    std::string s = " (seeds:";
    for (auto v : seeds) s += " " + std::to_string(v);
    return s + ")";
  }
  std::vector<std::uint64_t> seeds_;
};

}  // namespace brim
