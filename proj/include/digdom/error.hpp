#ifndef DIGDOM_ERROR_HPP
#define DIGDOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace digdom {

enum class ErrorCode {
    invalid_argument,
    parse,
    io,
    construction,
    precondition,
    unsupported,
    indeterminate,
};

/// Library-wide exception. The code maps one-to-one onto the C API status
/// values, so the shared-library boundary never has to inspect messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when a proven inequality fails on exactly solved values.
/// This always means a solver bug (or a refutation), never bad input.
class ProvenBoundViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace digdom

#endif // DIGDOM_ERROR_HPP
