#ifndef CHEBROOT_ERRORS_HPP
#define CHEBROOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chebroot {

// Precondition violation on mathematical input (x <= 0, x == r^2, ...).
// CLI exit code 1.
class domain_error : public std::domain_error {
  public:
    explicit domain_error(const std::string & what) : std::domain_error(what) {}
};

// Malformed request: unknown identity tag, incompatible form/parity, n = 0
// with a closed form. CLI exit code 2.
class usage_error : public std::invalid_argument {
  public:
    explicit usage_error(const std::string & what) : std::invalid_argument(what) {}
};

// Operand-growth guard trip or enumeration cap. CLI exit code 3.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string & what) : std::runtime_error(what) {}
};

} // namespace chebroot

#endif
