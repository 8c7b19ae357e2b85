#pragma once

#include <stdexcept>
#include <string>

namespace vres {

// Invalid arguments: bad sizes, negative degrees, non-minimal elements.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A closed-form identity disagreed with a direct computation. Always a bug.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Random sampling failed to produce a point set with generic behaviour.
class GenericityExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace vres
