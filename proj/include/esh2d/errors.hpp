#pragma once

#include <stdexcept>
#include <string>

namespace esh2d {

// Input tensor failed a symmetry check; carries the worst deviation found.
class SymmetryViolation : public std::runtime_error {
 public:
  SymmetryViolation(const std::string& what, double max_deviation)
      : std::runtime_error(what), max_deviation_(max_deviation) {}

  double max_deviation() const noexcept { return max_deviation_; }

 private:
  double max_deviation_;
};

// Exponent tuple does not satisfy the degree equation.
class InfeasibleSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural identity guaranteed by the pipeline was violated. Signals a
// defect in this library, not bad input.
class InternalSymmetryBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace esh2d
