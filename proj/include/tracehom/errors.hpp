#ifndef TRACEHOM_ERRORS_HPP
#define TRACEHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tracehom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document. `where` is a JSON-pointer-like location.
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what)
        : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// A size limit (state count, place count, simplex count) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The nerve oracle was asked to run on a system with a directed cycle.
class CyclicSystem : public Error {
public:
    using Error::Error;
};

}  // namespace tracehom

#endif  // TRACEHOM_ERRORS_HPP
