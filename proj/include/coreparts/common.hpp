#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coreparts {

/// Exact integer used for counts, series coefficients and statistic sums.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when an operation is called on an input outside its documented
/// precondition (e.g. a non-core handed to a map defined only on cores).
/// Argument-range problems use std::domain_error instead.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Mathematical remainder in [0, m) for m > 0.
constexpr std::int64_t floor_mod(std::int64_t x, std::int64_t m) noexcept {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

/// Floor division for m > 0.
constexpr std::int64_t floor_div(std::int64_t x, std::int64_t m) noexcept {
    return (x - floor_mod(x, m)) / m;
}

constexpr std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const std::int64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

} // namespace coreparts
