#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dcount/bigint.hpp"
#include "dcount/errors.hpp"

namespace dcount {

// Falling factorial n(n-1)...(n-k+1); the empty product (k = 0) is 1.
// Counts injective k-tuples from an n-set when n >= 0, and is 0 for
// 0 <= n < k. Throws std::invalid_argument for k < 0.
BigInt falling_factorial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t k);

// Binomial coefficient with the generalized convention for negative upper
// index: C(n, k) = (-1)^k C(k-n-1, k) for n < 0, and 0 whenever k < 0.
// The alternating-sum identities used by the closed forms need exactly this
// extension (they walk through C(q/p - 2, .) which is negative-topped at
// q = p).
BigInt binomial(std::int64_t n, std::int64_t k);

// Unsigned Stirling number of the first kind c(k, i): permutations of S_k
// with exactly i cycles. Recurrence c(k,i) = c(k-1,i-1) + (k-1)c(k-1,i).
BigInt stirling_first_unsigned(std::int64_t k, std::int64_t i);

// Predicate over one cycle of a permutation, given the cycle's member set
// (0-based indices, ascending). Must be deterministic and depend only on
// the members.
using CyclePredicate = std::function<bool(std::span<const int> members)>;

inline constexpr int kPermutationOracleMaxK = 9;

// Exhaustive S_k oracle: the number of permutations of {0,..,k-1} with
// exactly i cycles, all of whose cycles satisfy pred. Enumerates all k!
// permutations, so it is capped at k <= 9; it exists to validate the fast
// engines, not to compute.
BigInt count_permutations_by_cycles(int k, int i, const CyclePredicate& pred);

// A partition of {0,..,k-1} into nonempty blocks; canonical form sorts
// blocks by their minimum element and members ascending within a block.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
};

inline constexpr int kSetPartitionMaxK = 14;

// Visits every set partition of {0,..,k-1} exactly once, in the canonical
// order induced by restricted-growth strings. The blocks reference is reused
// between calls; copy it if it must outlive the callback. k <= 14
// (Bell(14) ~ 1.9e8 is the ceiling; engines cap lower).
void for_each_set_partition(int k,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit);

// Materialized variant for small k (tests and desk checks).
std::vector<SetPartition> enumerate_set_partitions(int k);

}  // namespace dcount
