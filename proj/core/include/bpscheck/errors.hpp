#pragma once

#include <stdexcept>
#include <string>

namespace bps {

/// Base class for every error the library reports deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A coefficient was requested (or supplied) outside the truncation window.
/// Distinguishes "unknown because truncated" from an honest zero.
class WindowError : public Error {
public:
    explicit WindowError(const std::string& what) : Error(what) {}
};

/// An enumeration or counting job would exceed its configured budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

} // namespace bps
