#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toricpack {

// Typed error with a stable machine-readable code ("DegenerateHull",
// "NotDelzant", ...). The CLI maps codes to exit statuses; library users
// can switch on code() without parsing messages.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace toricpack
