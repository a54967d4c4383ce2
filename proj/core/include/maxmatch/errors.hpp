#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxmatch {

// Malformed graph6 / edge-list input. `offset` is the byte offset for
// graph6 and the 1-based line number for edge lists.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A bounded search ran out of nodes before reaching an answer. Callers
// must treat this as "undecided", never as a verdict.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Any instance of this is a counterexample
// to a result the library is built on and must never be swallowed.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace maxmatch
