#pragma once

#include <stdexcept>
#include <string>

namespace dcount {

// Raised when a requested computation exceeds its configured budget
// (enumeration size, subset-DP width, Bell-number cap, ...).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dcount
