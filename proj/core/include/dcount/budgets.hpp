#pragma once

#include <cstdint>

namespace dcount {

// Cost ceilings for the counting engines. The defaults are sized for a
// laptop; every engine throws BudgetError instead of starting a computation
// it cannot finish.
struct Budgets {
    // Brute-force oracles: maximum number of tuples enumerated.
    std::uint64_t brute_tuples = 100'000'000;
    // Subset-DP sieve: 3^k submask iterations.
    int sieve_max_k = 18;
    // Partition enumeration: Bell(k) set partitions.
    int partition_max_k = 12;
    // F_q^* recursion over sub-multisets: up to 2^k states.
    int units_max_k = 16;
};

}  // namespace dcount
