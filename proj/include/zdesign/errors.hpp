#pragma once

#include <stdexcept>
#include <string>

namespace zdesign {

struct NotAPrimePower : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct IncompatibleFields : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroupMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroupTooLarge : std::length_error {
  using std::length_error::length_error;
};

struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

struct EvenCharacteristic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct QTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct KTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConstructionSelfCheckFailed : std::logic_error {
  using std::logic_error::logic_error;
};

struct EmptySet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionTooLarge : std::length_error {
  using std::length_error::length_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zdesign
