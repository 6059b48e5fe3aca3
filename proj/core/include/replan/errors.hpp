#pragma once

#include <stdexcept>
#include <string>

namespace replan {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// An id token did not resolve against the instance it was used with.
class UnknownIdError : public Error {
public:
    UnknownIdError(std::string kind, std::string id)
        : Error("unknown " + kind + " '" + id + "'"), kind_(std::move(kind)), id_(std::move(id)) {}

    const std::string& kind() const { return kind_; }
    const std::string& id() const { return id_; }

private:
    std::string kind_;
    std::string id_;
};

/// A solution refers to ids that do not exist in the instance.
class DanglingReferenceError : public Error {
public:
    using Error::Error;
};

/// An instance file refers to ids that are not defined anywhere in it.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// A 0/1 program violates its structural invariants (dangling variable,
/// duplicate variable within a constraint).
class MalformedProblemError : public Error {
public:
    using Error::Error;
};

/// A lock demands an assignment pair that has no decision variable.
class LockedPairIneligibleError : public Error {
public:
    LockedPairIneligibleError(std::string occurrence_id, std::string ta_id)
        : Error("locked pair is not assignable: occurrence '" + occurrence_id + "', ta '" + ta_id + "'"),
          occurrence_id_(std::move(occurrence_id)),
          ta_id_(std::move(ta_id)) {}

    const std::string& occurrence_id() const { return occurrence_id_; }
    const std::string& ta_id() const { return ta_id_; }

private:
    std::string occurrence_id_;
    std::string ta_id_;
};

/// Attempt to read variable values out of a solution that has none.
class StatusNotSolvedError : public Error {
public:
    using Error::Error;
};

/// A change script line could not be parsed.
class SyntaxError : public Error {
public:
    SyntaxError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// An instance/solution file could not be parsed.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// The instance generator could not produce a solvable instance within its
/// retry budget.
class GenerationFailedError : public Error {
public:
    using Error::Error;
};

/// No change of the requested kind can be constructed for this instance.
class ScenarioUnconstructibleError : public Error {
public:
    using Error::Error;
};

/// Brute-force enumeration would exceed the configured guard.
class TooLargeError : public Error {
public:
    using Error::Error;
};

/// Enumeration was interrupted through its cancellation token.
class CancelledError : public Error {
public:
    using Error::Error;
};

} // namespace replan
