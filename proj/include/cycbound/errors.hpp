#pragma once

#include <stdexcept>
#include <string>

namespace cycbound {

// Domain error with a stable machine-readable code ("not_prime",
// "budget_exceeded", ...) next to the human message.  The CLI maps any
// Error to exit code 2 and prints the code on the diagnostic stream.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace cycbound
