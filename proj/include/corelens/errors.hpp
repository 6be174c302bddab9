#ifndef CORELENS_ERRORS_HPP
#define CORELENS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace corelens {

/// Malformed input text. Carries the 1-based line number of the offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A task request that violates the taxonomy: bad scope/action pair,
/// unknown target for the scope, wrong input arity, or a broken chain binding.
class task_error : public std::runtime_error {
public:
    enum class Kind { scope_action, scope_target, arity, chaining, params };

    task_error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace corelens

#endif
