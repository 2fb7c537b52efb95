#ifndef DGOLD_ERRORS_HPP
#define DGOLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dgold {

// Bad arguments or configuration (CLI exit code 2).
class validation_error : public std::invalid_argument {
public:
  explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A size/cost cap was exceeded (CLI exit code 3).
class cap_error : public std::length_error {
public:
  explicit cap_error(const std::string& msg) : std::length_error(msg) {}
};

// An internal invariant failed to hold (CLI exit code 4).
class invariant_error : public std::logic_error {
public:
  explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace dgold

#endif  // DGOLD_ERRORS_HPP
