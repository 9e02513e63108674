#pragma once

#include <stdexcept>
#include <string>

namespace dyckmat {

/// Thrown when a request would exceed a configurable enumeration or scan
/// budget. Distinct from std::invalid_argument: the request is well formed,
/// just too large for the configured limit.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dyckmat
