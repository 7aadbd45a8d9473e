#ifndef RSUP_ERRORS_HPP
#define RSUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsup {

/// Malformed input text: unreadable files, bad JSON, schema violations,
/// witness strings that do not replay. CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that violates an operation's precondition:
/// alphabet conflicts, spec not contained in plant, unknown names. CLI exit code 3.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rsup

#endif
