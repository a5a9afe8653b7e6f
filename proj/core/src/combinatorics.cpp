#include "dcount/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dcount {

BigInt falling_factorial(std::int64_t n, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
    BigInt prod = 1;
    for (std::int64_t j = 0; j < k; ++j) {
        prod *= BigInt(n - j);
        if (prod == 0) break;
    }
    return prod;
}

BigInt factorial(std::int64_t k) { return falling_factorial(k, k); }

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (n < 0) {
        BigInt v = binomial(k - n - 1, k);
        return (k % 2 == 0) ? v : -v;
    }
    if (k > n) return 0;
    k = std::min(k, n - k);
    // Multiplicative form; each prefix product is divisible by j!.
    BigInt v = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        v *= BigInt(n - k + j);
        v /= j;
    }
    return v;
}

BigInt stirling_first_unsigned(std::int64_t k, std::int64_t i) {
    if (k < 0 || i < 0) return 0;
    if (i > k) return 0;
    // Row-by-row; c(0,0) = 1.
    std::vector<BigInt> row{1};
    for (std::int64_t m = 1; m <= k; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, BigInt(0));
        for (std::int64_t j = 0; j < static_cast<std::int64_t>(row.size()); ++j) {
            if (row[j] == 0) continue;
            next[j + 1] += row[j];
            next[j] += BigInt(m - 1) * row[j];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(i)];
}

BigInt count_permutations_by_cycles(int k, int i, const CyclePredicate& pred) {
    if (k < 0) throw std::invalid_argument("count_permutations_by_cycles: negative k");
    if (k > kPermutationOracleMaxK)
        throw BudgetError("count_permutations_by_cycles: k = " + std::to_string(k) +
                          " exceeds the k <= " + std::to_string(kPermutationOracleMaxK) +
                          " enumeration cap");
    if (k == 0) return (i == 0) ? 1 : 0;

    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);

    BigInt total = 0;
    std::vector<char> seen(static_cast<std::size_t>(k));
    std::vector<int> cycle;
    do {
        std::fill(seen.begin(), seen.end(), 0);
        int cycles = 0;
        bool ok = true;
        for (int s = 0; s < k && ok; ++s) {
            if (seen[s]) continue;
            cycle.clear();
            for (int t = s; !seen[t]; t = perm[t]) {
                seen[t] = 1;
                cycle.push_back(t);
            }
            ++cycles;
            if (cycles > i) {
                ok = false;
                break;
            }
            std::sort(cycle.begin(), cycle.end());
            if (!pred(std::span<const int>(cycle))) ok = false;
        }
        if (ok && cycles == i) ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace {

// Restricted-growth-string recursion: label[j] <= 1 + max(label[0..j-1]).
// Blocks indexed by label are exactly the canonical form (labels appear in
// order of first occurrence, i.e. blocks sorted by minimum element).
void rgs_recurse(int k, int depth, int max_label,
                 std::vector<std::vector<int>>& blocks,
                 const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (depth == k) {
        visit(blocks);
        return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
        if (label == static_cast<int>(blocks.size())) blocks.emplace_back();
        blocks[static_cast<std::size_t>(label)].push_back(depth);
        rgs_recurse(k, depth + 1, std::max(max_label, label), blocks, visit);
        blocks[static_cast<std::size_t>(label)].pop_back();
        if (blocks.back().empty()) blocks.pop_back();
    }
}

}  // namespace

void for_each_set_partition(
    int k, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (k < 1) throw std::invalid_argument("for_each_set_partition: k must be >= 1");
    if (k > kSetPartitionMaxK)
        throw BudgetError("for_each_set_partition: k = " + std::to_string(k) +
                          " exceeds the k <= " + std::to_string(kSetPartitionMaxK) +
                          " Bell-number cap");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(k));
    rgs_recurse(k, 0, -1, blocks, visit);
}

std::vector<SetPartition> enumerate_set_partitions(int k) {
    std::vector<SetPartition> out;
    for_each_set_partition(k, [&](const std::vector<std::vector<int>>& blocks) {
        out.push_back(SetPartition{blocks});
    });
    return out;
}

}  // namespace dcount
