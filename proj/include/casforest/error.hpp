#pragma once

#include <stdexcept>
#include <string>

namespace casforest {

// Validation and input errors a caller can act on. The CLI maps these to
// exit code 2; any other exception is an internal error (exit code 1).
class CasError : public std::runtime_error {
public:
    explicit CasError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace casforest
