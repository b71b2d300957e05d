#pragma once

#include <stdexcept>
#include <string>

namespace berge {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An intermediate value left the representable integer range. Computations
// abort instead of wrapping; a wrapped product would fabricate verification
// results.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

// gcd(a, p) != 1 where an inverse mod p was required.
struct NotInvertibleError : Error {
    explicit NotInvertibleError(const std::string& what) : Error(what) {}
};

// Residue arithmetic between different moduli.
struct ModulusMismatchError : Error {
    explicit ModulusMismatchError(const std::string& what) : Error(what) {}
};

// fib_pair_normalize with |b^2 - ab - a^2| <= 1.
struct DegenerateModulusError : Error {
    explicit DegenerateModulusError(const std::string& what) : Error(what) {}
};

// chi_positive_closure on a word containing negative letters.
struct NonPositiveWordError : Error {
    explicit NonPositiveWordError(const std::string& what) : Error(what) {}
};

// chi_positive_closure on a closure with more than one component.
struct DisconnectedClosureError : Error {
    explicit DisconnectedClosureError(const std::string& what) : Error(what) {}
};

// Type VIII cable parameters with s | r (in particular s = 1), where the
// strict inequalities (m-1)s < r < ms have no solution.
struct DegenerateCableError : Error {
    explicit DegenerateCableError(const std::string& what) : Error(what) {}
};

// Any other precondition violation (bad ranges, non-coprime input, ...).
struct InvalidParameterError : Error {
    explicit InvalidParameterError(const std::string& what) : Error(what) {}
};

} // namespace berge
