#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsurg {

// All slope/lattice arithmetic is exact. Int/Rat are arbitrary precision;
// combinatorial kernels (covector coordinates, search rows) use int64 after
// an explicit range guard.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Bad user input (non-coprime slope, malformed JSON, oversized search, ...).
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (singular plumbing matrix, push-down loop guard).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Division rounding toward -infinity.
inline Int floorDiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long floorDiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Largest magnitude allowed for int64-based enumeration kernels.
inline constexpr long long kEnumLimit = 1LL << 30;

inline long long toEnumInt(const Int& v, const char* what) {
    if (v > kEnumLimit || v < -Int(kEnumLimit))
        throw InputError(std::string(what) + " too large for exact enumeration (limit 2^30)");
    return v.convert_to<long long>();
}

// Canonical "num/den" form, den >= 1 (e.g. "1/4", "-3/14", "0/1").
inline std::string ratString(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace dsurg
