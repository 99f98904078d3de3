#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input from a caller (the CLI maps this to exit code 2).
class invalid_argument : public error {
public:
    using error::error;
};

/// A broken internal invariant (the CLI maps this to exit code 1).
class internal_error : public error {
public:
    using error::error;
};

/// Signed 64-bit arithmetic left the representable range.
class arithmetic_overflow : public error {
public:
    using error::error;
};

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw arithmetic_overflow("integer overflow in addition");
    }
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw arithmetic_overflow("integer overflow in multiplication");
    }
    return r;
}

} // namespace qschur
