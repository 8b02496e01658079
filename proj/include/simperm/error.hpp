#pragma once

#include <stdexcept>
#include <string>

namespace simperm {

// Exception carrying a module-specific error code.
template <typename Code>
class Error : public std::runtime_error {
public:
    Error(Code code, const std::string& message) : std::runtime_error(message), m_code(code) {}

    Code code() const noexcept { return m_code; }

private:
    Code m_code;
};

} // namespace simperm
