#pragma once

#include <stdexcept>
#include <string>

namespace slopekit {

/// Error raised by any slopekit module. `module()` names the component that
/// raised it and `kind()` is a short machine-readable tag such as
/// "malformed-word" or "net-infeasible".
class Error : public std::runtime_error {
public:
    Error(std::string module, std::string kind, const std::string& message)
        : std::runtime_error(message), module_(std::move(module)), kind_(std::move(kind)) {}

    const std::string& module() const noexcept { return module_; }
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string module_;
    std::string kind_;
};

} // namespace slopekit
