#pragma once

#include <stdexcept>
#include <string>

namespace gr {

/// Bad input from the caller: malformed text, size mismatch, violated precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An ornament outside the image of the forward map. `condition()` is 1, 2 or 3.
class ConditionViolation : public InvalidInput {
public:
    ConditionViolation(int condition, const std::string& what)
        : InvalidInput(what), condition_(condition) {}

    int condition() const noexcept { return condition_; }

private:
    int condition_;
};

/// An exhaustive routine was asked for a size above its configured cap.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not. Always a bug in this library.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gr
