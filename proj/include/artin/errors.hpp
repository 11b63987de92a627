#pragma once

#include <stdexcept>

namespace artin {

/// Raised when two arguments required to be coprime share a factor.
struct NotCoprime : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised for g outside the admissible set (g = 0, g = -1, or a perfect square).
struct InvalidG : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when an argument required to be squarefree has a square factor.
struct NotSquarefree : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when C(h) = 0 would be used as a denominator (h even).
struct DegenerateH : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when a local Euler factor is requested at an excluded prime.
struct PreconditionViolated : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised on cache/file failures; the CLI maps this to its IO exit code.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace artin
