#ifndef AETA_ERRORS_HPP
#define AETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aeta {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters, config files, or CLI overrides.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A configuration was refused before starting work (evaluation budget,
// table memory, enumeration size).
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed persisted file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

// Every key was assigned probability zero; only reachable with
// contradictory known-plaintext evidence on a zero-tail channel.
class InconsistentEvidenceError : public Error {
public:
    using Error::Error;
};

// Numerical integration failed to reach the requested tolerance.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& msg, double achieved)
        : Error(msg + " (achieved tolerance " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}
    double achieved_tolerance() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace aeta

#endif
