#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcount {

// All counts are exact arbitrary-precision integers. No floating point
// appears anywhere on a counting path.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// Counters for the exact-division traps. A fired trap means a formula's
// divisibility guarantee was violated, i.e. an implementation bug; we abort
// the computation rather than round.
struct DivisionStats {
    static std::atomic<std::uint64_t>& checks() {
        static std::atomic<std::uint64_t> n{0};
        return n;
    }
    static std::atomic<std::uint64_t>& failures() {
        static std::atomic<std::uint64_t> n{0};
        return n;
    }
};

// Quotient num/den, required to be exact. Throws std::logic_error otherwise.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
    DivisionStats::checks().fetch_add(1, std::memory_order_relaxed);
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) {
        DivisionStats::failures().fetch_add(1, std::memory_order_relaxed);
        throw std::logic_error(std::string("exact_div: inexact division in ") + context);
    }
    return quot;
}

}  // namespace dcount
