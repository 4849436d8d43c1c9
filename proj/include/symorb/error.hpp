#ifndef SYMORB_ERROR_HPP_
#define SYMORB_ERROR_HPP_

#include <stdexcept>
#include <string>

#include "integer.hpp"

namespace symorb {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A sublattice generator that is not an integral combination of the
// ambient lattice basis.
struct ContainmentError : std::domain_error {
  ContainmentError(const std::string& what, std::vector<std::string> offending)
      : std::domain_error(what), generator(std::move(offending)) {}
  std::vector<std::string> generator;  // rational coordinates as strings
};

// A model failed one of its structural invariants while being built.
struct ModelError : std::logic_error {
  using std::logic_error::logic_error;
};

// One of the N_U decomposition identities failed; carries the lattice
// vector that witnesses the failure.
struct ClaimViolation : std::logic_error {
  ClaimViolation(std::string claim_name, const std::string& what, IntVector witness)
      : std::logic_error(what), claim(std::move(claim_name)), counterexample(std::move(witness)) {}
  std::string claim;
  IntVector counterexample;
};

} // namespace symorb

#endif
