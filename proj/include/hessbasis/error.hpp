#pragma once

#include <stdexcept>
#include <string>

namespace hessbasis {

// Domain errors (division by zero, dimension mismatch, enumeration bound
// exceeded, inconsistent series, ...). The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hessbasis
