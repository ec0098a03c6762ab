#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cochain {

// Every failure mode named by the library carries a stable snake_case code;
// the CLI surfaces it verbatim in the JSON report.
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

// The const char* overload keeps the success path allocation-free; hot loops
// (group law, cochain lookups) go through it with static messages.
inline void require(bool ok, const char* code, const char* message) {
    if (!ok) fail(code, message);
}

inline void require(bool ok, const char* code, const std::string& message) {
    if (!ok) fail(code, message);
}

} // namespace cochain
