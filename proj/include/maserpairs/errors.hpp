#ifndef MASERPAIRS_ERRORS_HPP
#define MASERPAIRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maserpairs {

/// The steady-state product hit the hard photon-number cap before the
/// requested tail bound was reached.
class TruncationOverflow : public std::runtime_error {
  public:
    explicit TruncationOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// Computed pair correlations violate the physical-validity inequalities
/// beyond the numerics budget. Signals an internal bug, not bad user input.
class InvalidState : public std::runtime_error {
  public:
    explicit InvalidState(const std::string& what) : std::runtime_error(what) {}
};

/// No admissible root of the pure-part asymmetry equation was found.
class NoValidRoot : public std::runtime_error {
  public:
    explicit NoValidRoot(const std::string& what) : std::runtime_error(what) {}
};

/// The reconstructed separable part failed its positivity/PPT checks.
class DecompositionInvalid : public std::runtime_error {
  public:
    explicit DecompositionInvalid(const std::string& what) : std::runtime_error(what) {}
};

} // namespace maserpairs

#endif
