#ifndef FACETBETTI_ERRORS_HPP
#define FACETBETTI_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace facetbetti {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text or command-line arguments.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

  private:
    int line_;
};

/// Two values built over different vertex universes were combined.
class UniverseMismatch : public Error {
  public:
    using Error::Error;
};

/// A mathematical hypothesis of an operation does not hold for its input.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Something that the theory says cannot happen did happen. Carries the
/// construction trace that led there.
class InvariantViolation : public Error {
  public:
    InvariantViolation(const std::string& what, std::vector<std::string> trace = {})
        : Error(what), trace_(std::move(trace)) {}
    const std::vector<std::string>& trace() const noexcept { return trace_; }

  private:
    std::vector<std::string> trace_;
};

/// A configured size cap (face enumeration, corpus size) was exceeded.
class ResourceError : public Error {
  public:
    using Error::Error;
};

}  // namespace facetbetti

#endif
