#pragma once

#include <stdexcept>
#include <string>

namespace concord {

/// Rejected input: malformed syntax, violated preconditions, schema errors.
/// The CLI maps this to the "invalid input" exit status.
class invalid_input_error : public std::runtime_error {
public:
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource bound (degree limit, search budget) was exceeded.
/// Raised instead of ever returning an approximate or truncated answer.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace concord
