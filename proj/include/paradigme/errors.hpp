#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paradigme {

/// Malformed dictionary, counts or morph-rule source. Carries a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Network construction failed (e.g. a unit lost all of its tokens).
class BuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Query-level failure: unresolvable word, empty word list, size mismatch.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File missing, unreadable, or in an unsupported serialized format.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace paradigme
