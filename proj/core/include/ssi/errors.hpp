#pragma once

#include <stdexcept>
#include <string>

namespace ssi {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural problems found while assembling a game model.
class ModelError : public Error {
public:
    enum class Kind {
        DuplicateId,
        DanglingReference,
        EmptyInitialSet,
        DuplicateTransition,
        DuplicateOutcome,
        InvalidProbability,
        InvalidIdentity,
        InvalidId,
        InvalidCost,
    };

    ModelError(Kind kind, std::string subject, const std::string& message)
        : Error(message), kind_(kind), subject_(std::move(subject)) {}

    Kind kind() const { return kind_; }
    const std::string& subject() const { return subject_; }

private:
    Kind kind_;
    std::string subject_;
};

// A state or operation id that is not part of the queried space.
class UnknownIdError : public Error {
public:
    explicit UnknownIdError(std::string id)
        : Error("unknown id: " + id), id_(std::move(id)) {}

    const std::string& id() const { return id_; }

private:
    std::string id_;
};

// Raised when an operation has no transition from the given state.
class InapplicableError : public Error {
public:
    InapplicableError(std::string state, std::string op)
        : Error("operation '" + op + "' is not applicable in state '" + state + "'"),
          state_(std::move(state)),
          op_(std::move(op)) {}

    const std::string& state() const { return state_; }
    const std::string& op() const { return op_; }

private:
    std::string state_;
    std::string op_;
};

// Validation refuses models whose possibilistic edge count exceeds the cap.
class ScaleLimitError : public Error {
public:
    ScaleLimitError(std::size_t edges, std::size_t limit)
        : Error("model has " + std::to_string(edges) + " edges, exceeding the cap of " +
                std::to_string(limit)),
          edges_(edges),
          limit_(limit) {}

    std::size_t edges() const { return edges_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t edges_;
    std::size_t limit_;
};

// Path enumeration refuses step bounds above its configured cap.
class CapExceededError : public Error {
public:
    CapExceededError(std::size_t requested, std::size_t cap)
        : Error("requested " + std::to_string(requested) + " steps, enumeration cap is " +
                std::to_string(cap)) {}
};

// Malformed document text; line/column are 1-based (column 0 = whole line).
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) +
                (column > 0 ? ", col " + std::to_string(column) : "") + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// The interactive policy was cancelled (end of input or explicit quit).
class InteractiveAbortError : public Error {
public:
    InteractiveAbortError() : Error("interactive session aborted") {}
};

}  // namespace ssi
