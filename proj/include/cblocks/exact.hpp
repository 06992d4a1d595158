#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cblocks {

using Integer = mpz_class;
using Rational = mpq_class;
using RVector = std::vector<Rational>;

/// Bad user input: malformed specs, out-of-range weights, mismatched sizes.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured resource limit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result violated a mathematical invariant that must hold (e.g. a degree
/// that came out non-integral). Always a bug, never bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Canonical "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

inline std::string to_string(const Integer& z)
{
    return z.get_str();
}

inline bool is_integral(const Rational& q)
{
    return q.get_den() == 1;
}

}  // namespace cblocks
