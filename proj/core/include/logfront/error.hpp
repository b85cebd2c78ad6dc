#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace logfront {

// All library failures carry a module name and a stable machine-readable
// code so the CLI can surface "module.code" to scripts.
class Error : public std::runtime_error {
public:
    Error(std::string module, std::string code, const std::string& message)
        : std::runtime_error(module + "." + code + ": " + message),
          module_(std::move(module)),
          code_(std::move(code)),
          message_(message) {}

    const std::string& module() const noexcept { return module_; }
    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string module_;
    std::string code_;
    std::string message_;
};

}  // namespace logfront
