#ifndef LIEMULT_ERRORS_HPP
#define LIEMULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liemult {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands belong to different fields, alphabets or presentations.
class mismatch_error : public error {
  public:
    using error::error;
};

/// A precondition on an operation's arguments was violated.
class domain_error : public error {
  public:
    using error::error;
};

/// A computation exceeded the configured degree cap.
class resource_error : public error {
  public:
    using error::error;
};

/// Malformed expression or configuration text.
class parse_error : public error {
  public:
    using error::error;
};

/// The Dynkin Lie-ness test needs char 0 or char > degree.
class criterion_unavailable : public error {
  public:
    using error::error;
};

} // namespace liemult

#endif
