#ifndef RISPLS_ERRORS_HPP
#define RISPLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rispls {

/// Bad user input: malformed scenario files, wrong vector lengths, non-binary phases.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two points that must be separated coincide (zero-length link).
class DegenerateGeometry : public std::domain_error {
public:
  explicit DegenerateGeometry(const std::string& what) : std::domain_error(what) {}
};

/// Interference plus noise underflowed to zero, so the SINR is unbounded.
class InfiniteCapacity : public std::domain_error {
public:
  explicit InfiniteCapacity(const std::string& what) : std::domain_error(what) {}
};

/// No point of the search domain satisfies the requested constraint.
class Infeasible : public std::runtime_error {
public:
  explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rispls

#endif
