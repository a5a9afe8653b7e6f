#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcount/algebra.hpp"
#include "dcount/bigint.hpp"
#include "dcount/budgets.hpp"
#include "dcount/combinatorics.hpp"

namespace dcount {

// One counting problem: the number of solutions of
//     a_1 x_1 + ... + a_k x_k = b
// over D = F_q (full) or D = F_q^* (units) with all x_i pairwise distinct.
struct Instance {
    Field field;
    std::vector<Element> coeffs;  // k >= 1
    Element target{};
    Domain domain = Domain::full;

    int k() const { return static_cast<int>(coeffs.size()); }
};

enum class Method { automatic, brute, recurrence, sieve, partition, closed };

Method method_from_string(std::string_view name);
std::string method_to_string(Method m);

struct CountResult {
    BigInt count;
    std::string method;  // brute | recurrence | sieve-dp | partition |
                         // units-recursion | closed-form:<name>
};

// The weight v(b): -1 for b != 0 and q-1 for b = 0. Sums to 0 over b.
std::int64_t nu(Element b, const Field& f);

// Memo table for the recurrence kernel d, keyed by the sorted coefficient
// encodings (d is permutation-invariant in its arguments).
using DeltaKey = std::vector<std::uint32_t>;
using DeltaMemo = std::map<DeltaKey, BigInt>;

// The recurrence kernel d(a_1,...,a_k) = N_{F*}(a;1) - N_{F*}(a;0):
//   d(a_1)      = -v(a_1)
//   sum a != 0  : d(a) = -sum_i d(a drop i)
//   sum a == 0  : d(a) = (q - k) d(a drop j)   (any j; we drop the largest
//                 encoding, which is canonical and drop-independent)
BigInt delta(std::vector<Element> coeffs, const Field& f, DeltaMemo& memo);

// Ground-truth oracle: enumerates injective (k-1)-tuples over D and solves
// for x_k when a_k != 0; enumerates full injective k-tuples when a_k = 0.
// Returns 0 (not an error) when k > |D|.
BigInt count_brute(const Instance& inst, const Budgets& budgets = {});

// Recurrence engine (domain = full): (q)_k / q when sum a != 0, else
// (q)_k/q - v(b)/q (d(a) + sum_i d(a drop i)). All divisions checked exact.
BigInt count_recurrence(const Instance& inst);

// Signed cycle weight W = sum_i (-1)^{k-i} p(a; k, i) q^i, where p(a; k, i)
// counts permutations with i cycles whose every cycle has vanishing
// coefficient sum. Evaluated by a 3^k dynamic program over subsets; each
// zero-sum block on T contributes (-1)^{|T|-1} (|T|-1)! q.
BigInt sieve_weight(std::span<const Element> coeffs, const Field& f,
                    const Budgets& budgets = {});

// Sieve engine (domain = full): (q)_k / q + v(b) W / q, divisions exact.
BigInt count_sieve(const Instance& inst, const Budgets& budgets = {});

// Independent second route: direct evaluation over set partitions with
// |X_P| = q^{l-1} (some block sum nonzero) or q^{l-1}(v(b)+1) (all zero).
// Exists solely to cross-validate count_sieve; Bell-number cost, k <= 12.
BigInt count_partition_oracle(const Instance& inst, const Budgets& budgets = {});

struct ClosedForm {
    BigInt count;
    std::string name;  // all-equal | two-exceptional | subset-sums-nonzero
};

// Closed-form dispatcher (domain = full). Tries, in order:
//   (a) all coefficients equal a common lambda != 0,
//   (b) k >= 3 and at least k-2 coefficients equal a common lambda != 0,
//   (c) sum a = 0 with every nonempty proper subset sum nonzero.
// Returns nullopt when none applies.
std::optional<ClosedForm> count_closed_form(const Instance& inst);

// Route (b) alone, exposed for exhaustive case-coverage sweeps. case_id is
// 1 (coefficient sum nonzero), 2 (sum zero, exceptional pair outside F_p),
// or 3 (sum zero, pair inside F_p); boundary marks the residue-sum == p
// edge of the case-3 indicator set.
struct TwoExceptional {
    BigInt count;
    int case_id = 0;
    bool boundary = false;
};
std::optional<TwoExceptional> count_two_exceptional(const Instance& inst);

// Units-domain engine: N_{F*}(a; b) = N_F(a; b) - sum_i N_{F*}(a drop i; b),
// memoized over sub-multisets, with N_F supplied by count_sieve.
BigInt count_units(const Instance& inst, const Budgets& budgets = {});

// Existence of a distinct-coordinate solution (domain = full). For b != 0
// and q >= 3 this is decided by the degenerate-case classification; for
// b = 0 or q = 2 it falls back to counting.
bool exists_distinct(const Instance& inst, const Budgets& budgets = {});

// N_{F_q^*}(1, w, w^2, ..., w^{q-2}; 0) with w the canonical primitive
// element: the number of bijections f of F_q with f(0) = 0 whose
// interpolating polynomial has degree <= q-3. Computed via count_units.
BigInt perm_poly_census(const Field& f, const Budgets& budgets = {});

// Independent census route: interpolates every bijection fixing 0 and reads
// off the reduced degree. (q-1)! cost; q <= 9.
BigInt perm_poly_census_interpolation(const Field& f);

// Top-level dispatcher. `automatic` picks a closed form when one applies,
// else the sieve DP (domain = full) or the units recursion (domain = units).
CountResult count(const Instance& inst, Method method = Method::automatic,
                  const Budgets& budgets = {});

}  // namespace dcount
