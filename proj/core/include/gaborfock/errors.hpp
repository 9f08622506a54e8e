#pragma once

#include <stdexcept>
#include <string>

namespace gaborfock {

struct TailUnboundedError : std::runtime_error {
    explicit TailUnboundedError(const std::string& what) : std::runtime_error(what) {}
};

struct TaylorCapError : std::runtime_error {
    explicit TaylorCapError(const std::string& what) : std::runtime_error(what) {}
};

struct GridTooCoarseError : std::runtime_error {
    explicit GridTooCoarseError(const std::string& what) : std::runtime_error(what) {}
};

struct NotALatticePointError : std::runtime_error {
    explicit NotALatticePointError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAZeroError : std::runtime_error {
    explicit NotAZeroError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPerturbationError : std::runtime_error {
    explicit InvalidPerturbationError(const std::string& what) : std::runtime_error(what) {}
};

struct LatticeCollisionError : std::runtime_error {
    explicit LatticeCollisionError(const std::string& what) : std::runtime_error(what) {}
};

struct TooManyPointsError : std::runtime_error {
    explicit TooManyPointsError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainTooSmallError : std::runtime_error {
    explicit DomainTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gaborfock
