#pragma once

#include <stdexcept>

namespace pdc {

// Bad arguments: parameters out of range, non-coprime pairs, malformed text.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Replacement arithmetic would push a tail exponent below zero.
class NegativeTail : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Witness construction requires a non-contractible complex.
class ContractibleInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace pdc
