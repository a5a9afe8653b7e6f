#include "dcount/fq_count.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "dcount/errors.hpp"

namespace dcount {

namespace {

Element coeff_sum(std::span<const Element> coeffs, const Field& f) {
    Element s = f.zero();
    for (Element a : coeffs) s = f.add(s, a);
    return s;
}

void require_domain_full(const Instance& inst, const char* op) {
    if (inst.domain != Domain::full)
        throw std::invalid_argument(std::string(op) + ": domain must be 'full'");
}

void validate_instance(const Instance& inst) {
    if (inst.coeffs.empty()) throw std::invalid_argument("instance: k must be >= 1");
    for (Element a : inst.coeffs)
        if (a.enc >= inst.field.q()) throw std::invalid_argument("instance: coefficient out of range");
    if (inst.target.enc >= inst.field.q())
        throw std::invalid_argument("instance: target out of range");
}

DeltaKey make_key(std::span<const Element> coeffs) {
    DeltaKey key;
    key.reserve(coeffs.size());
    for (Element a : coeffs) key.push_back(a.enc);
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

std::int64_t nu(Element b, const Field& f) {
    return b.enc == 0 ? static_cast<std::int64_t>(f.q()) - 1 : -1;
}

BigInt count_brute(const Instance& inst, const Budgets& budgets) {
    const Field& f = inst.field;
    const int k = inst.k();
    const auto domain_size = static_cast<std::int64_t>(f.q()) - (inst.domain == Domain::units);
    if (k > domain_size) return 0;  // pigeonhole

    const Element last = inst.coeffs.back();
    const bool solve_last = last.enc != 0;
    const int depth_max = solve_last ? k - 1 : k;
    const BigInt cost = falling_factorial(domain_size, depth_max);
    if (cost > budgets.brute_tuples)
        throw BudgetError("count_brute: enumeration of " + to_decimal(cost) +
                          " tuples exceeds the budget of " + std::to_string(budgets.brute_tuples));

    const Element a_last_inv = solve_last ? f.inv(last) : f.zero();
    const std::uint32_t lo = (inst.domain == Domain::units) ? 1 : 0;
    std::vector<char> used(f.q(), 0);
    BigInt total = 0;

    // Depth-first over injective prefixes, carrying the partial sum.
    auto recurse = [&](auto&& self, int depth, Element partial) -> void {
        if (depth == depth_max) {
            if (solve_last) {
                const Element x = f.mul(a_last_inv, f.sub(inst.target, partial));
                if (x.enc >= lo && !used[x.enc]) ++total;
            } else if (partial == inst.target) {
                ++total;
            }
            return;
        }
        for (std::uint32_t e = lo; e < f.q(); ++e) {
            if (used[e]) continue;
            used[e] = 1;
            self(self, depth + 1, f.add(partial, f.mul(inst.coeffs[depth], Element{e})));
            used[e] = 0;
        }
    };
    recurse(recurse, 0, f.zero());
    return total;
}

BigInt delta(std::vector<Element> coeffs, const Field& f, DeltaMemo& memo) {
    if (coeffs.empty()) throw std::invalid_argument("delta: k must be >= 1");
    std::sort(coeffs.begin(), coeffs.end());
    DeltaKey key = make_key(coeffs);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int k = static_cast<int>(coeffs.size());
    BigInt result;
    if (k == 1) {
        result = -nu(coeffs[0], f);
    } else if (coeff_sum(coeffs, f).enc != 0) {
        // d = -sum over positions of d(drop i); equal coefficients are
        // grouped and weighted by multiplicity.
        BigInt sum = 0;
        for (std::size_t i = 0; i < coeffs.size();) {
            std::size_t j = i;
            while (j < coeffs.size() && coeffs[j] == coeffs[i]) ++j;
            std::vector<Element> child(coeffs);
            child.erase(child.begin() + static_cast<std::ptrdiff_t>(i));
            sum += BigInt(j - i) * delta(std::move(child), f, memo);
            i = j;
        }
        result = -sum;
    } else {
        // Zero-sum branch: drop-independent, so drop the largest encoding.
        std::vector<Element> child(coeffs.begin(), coeffs.end() - 1);
        result = BigInt(static_cast<std::int64_t>(f.q()) - k) * delta(std::move(child), f, memo);
    }
    auto [it, inserted] = memo.emplace(std::move(key), std::move(result));
    return it->second;
}

BigInt count_recurrence(const Instance& inst) {
    require_domain_full(inst, "count_recurrence");
    const Field& f = inst.field;
    const int k = inst.k();
    const BigInt base = exact_div(falling_factorial(static_cast<std::int64_t>(f.q()), k),
                                  BigInt(f.q()), "count_recurrence (q)_k/q");
    if (coeff_sum(inst.coeffs, f).enc != 0) return base;

    DeltaMemo memo;
    BigInt dsum = delta(inst.coeffs, f, memo);
    for (std::size_t i = 0; i < inst.coeffs.size();) {
        std::size_t j = i;
        while (j < inst.coeffs.size() && inst.coeffs[j] == inst.coeffs[i]) ++j;
        std::vector<Element> child(inst.coeffs);
        child.erase(child.begin() + static_cast<std::ptrdiff_t>(i));
        dsum += BigInt(j - i) * delta(std::move(child), f, memo);
        i = j;
    }
    // q always divides the kernel sum: q N(a;1) = (q)_k + dsum.
    return base - nu(inst.target, f) * exact_div(dsum, BigInt(f.q()), "count_recurrence kernel");
}

BigInt sieve_weight(std::span<const Element> coeffs, const Field& f, const Budgets& budgets) {
    const int k = static_cast<int>(coeffs.size());
    if (k < 1) throw std::invalid_argument("sieve_weight: k must be >= 1");
    if (k > budgets.sieve_max_k)
        throw BudgetError("sieve_weight: k = " + std::to_string(k) + " exceeds the 3^k budget (k <= " +
                          std::to_string(budgets.sieve_max_k) + ")");

    const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    std::vector<char> zerosum(static_cast<std::size_t>(full) + 1);
    {
        std::vector<std::uint32_t> sum(static_cast<std::size_t>(full) + 1, 0);
        zerosum[0] = 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            const std::uint32_t low = mask & (~mask + 1);
            const int idx = std::countr_zero(mask);
            sum[mask] =
                f.add(Element{sum[mask ^ low]}, coeffs[static_cast<std::size_t>(idx)]).enc;
            zerosum[mask] = (sum[mask] == 0);
        }
    }

    // weight[t] = (t-1)! * q, the contribution of one zero-sum block of
    // size t (any of its (t-1)! cycles, each worth q contracted choices).
    std::vector<BigInt> weight(static_cast<std::size_t>(k) + 1);
    {
        BigInt fact = 1;
        for (int t = 1; t <= k; ++t) {
            fact *= (t > 1) ? (t - 1) : 1;
            weight[static_cast<std::size_t>(t)] = fact * BigInt(f.q());
        }
    }

    // F(S) = signed weight of all partitions of S into zero-sum blocks;
    // the block containing min(S) is split off explicitly.
    std::vector<BigInt> dp(static_cast<std::size_t>(full) + 1);
    dp[0] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t rest = mask ^ low;
        BigInt acc = 0;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t block = sub | low;
            if (zerosum[block]) {
                const int t = std::popcount(block);
                BigInt term = dp[mask ^ block];
                term *= weight[static_cast<std::size_t>(t)];
                if ((t - 1) & 1)
                    acc -= term;
                else
                    acc += term;
            }
            if (sub == 0) break;
        }
        dp[mask] = std::move(acc);
    }
    return dp[full];
}

BigInt count_sieve(const Instance& inst, const Budgets& budgets) {
    require_domain_full(inst, "count_sieve");
    const Field& f = inst.field;
    const BigInt base = exact_div(falling_factorial(static_cast<std::int64_t>(f.q()), inst.k()),
                                  BigInt(f.q()), "count_sieve (q)_k/q");
    const BigInt w = sieve_weight(inst.coeffs, f, budgets);
    // Every admissible partition carries a factor q per block, so q | W.
    return base + nu(inst.target, f) * exact_div(w, BigInt(f.q()), "count_sieve weight");
}

BigInt count_partition_oracle(const Instance& inst, const Budgets& budgets) {
    require_domain_full(inst, "count_partition_oracle");
    const Field& f = inst.field;
    const int k = inst.k();
    if (k > budgets.partition_max_k)
        throw BudgetError("count_partition_oracle: k = " + std::to_string(k) +
                          " exceeds the Bell-number budget (k <= " +
                          std::to_string(budgets.partition_max_k) + ")");

    std::vector<std::int64_t> fact(static_cast<std::size_t>(k) + 1, 1);
    for (int t = 1; t <= k; ++t)
        fact[static_cast<std::size_t>(t)] = fact[static_cast<std::size_t>(t - 1)] * t;

    // Signed permutation mass, bucketed by (#blocks, all-block-sums-zero).
    // The total absolute mass is k! <= 12!, so int64 accumulators suffice.
    std::vector<std::array<std::int64_t, 2>> buckets(static_cast<std::size_t>(k) + 1,
                                                     {0, 0});
    for_each_set_partition(k, [&](const std::vector<std::vector<int>>& blocks) {
        std::int64_t coef = 1;
        bool all_zero = true;
        for (const auto& block : blocks) {
            const auto len = static_cast<int>(block.size());
            coef *= fact[static_cast<std::size_t>(len - 1)];
            if ((len - 1) & 1) coef = -coef;
            Element s = f.zero();
            for (int i : block) s = f.add(s, inst.coeffs[static_cast<std::size_t>(i)]);
            if (s.enc != 0) all_zero = false;
        }
        buckets[blocks.size()][all_zero ? 1 : 0] += coef;
    });

    const BigInt vb1 = BigInt(nu(inst.target, f)) + 1;  // v(b) + 1
    BigInt total = 0;
    BigInt qpow = 1;  // q^{l-1}
    for (int ell = 1; ell <= k; ++ell) {
        const auto& b = buckets[static_cast<std::size_t>(ell)];
        if (b[0] != 0) total += BigInt(b[0]) * qpow;
        if (b[1] != 0) total += BigInt(b[1]) * qpow * vb1;
        qpow *= f.q();
    }
    return total;
}

namespace {

BigInt count_all_equal(const Instance& inst, Element lambda) {
    const Field& f = inst.field;
    const int k = inst.k();
    const auto p = static_cast<std::int64_t>(f.p());
    const BigInt base = exact_div(falling_factorial(static_cast<std::int64_t>(f.q()), k),
                                  BigInt(f.q()), "all-equal (q)_k/q");
    (void)lambda;  // only v(b) survives the rescale by 1/lambda
    if (k % p != 0) return base;
    const BigInt mass =
        exact_div(factorial(k) * binomial(static_cast<std::int64_t>(f.q()) / p, k / p),
                  BigInt(f.q()), "all-equal mass");
    const int sign = ((k + k / p) % 2 == 0) ? 1 : -1;
    return base + sign * nu(inst.target, f) * mass;
}

}  // namespace

std::optional<TwoExceptional> count_two_exceptional(const Instance& inst) {
    require_domain_full(inst, "count_two_exceptional");
    const Field& f = inst.field;
    const int k = inst.k();
    if (k < 3) return std::nullopt;

    // Pick lambda: a nonzero value carried by at least k-2 coefficients;
    // ties broken by multiplicity, then smallest encoding.
    std::map<std::uint32_t, int> mult;
    for (Element a : inst.coeffs) ++mult[a.enc];
    std::uint32_t lambda_enc = 0;
    int lambda_mult = 0;
    for (const auto& [enc, m] : mult) {
        if (enc == 0 || m < k - 2) continue;
        if (m > lambda_mult) {
            lambda_enc = enc;
            lambda_mult = m;
        }
    }
    if (lambda_mult == 0) return std::nullopt;

    // Rescale to the shape [a1, a2, 1, ..., 1].
    const Element lambda_inv = f.inv(Element{lambda_enc});
    std::vector<Element> scaled;
    scaled.reserve(inst.coeffs.size());
    for (Element a : inst.coeffs) scaled.push_back(f.mul(a, lambda_inv));
    std::sort(scaled.begin(), scaled.end());
    std::vector<Element> exceptional;
    {
        int ones_to_drop = k - 2;
        for (Element a : scaled) {
            if (a.enc == 1 && ones_to_drop > 0) {
                --ones_to_drop;
                continue;
            }
            exceptional.push_back(a);
        }
    }
    if (exceptional.size() != 2)
        throw std::logic_error("count_two_exceptional: rescale did not leave two coefficients");
    const Element a1 = exceptional[0], a2 = exceptional[1];

    const auto p = static_cast<std::int64_t>(f.p());
    const auto q = static_cast<std::int64_t>(f.q());
    const BigInt base =
        exact_div(falling_factorial(q, k), BigInt(f.q()), "two-exceptional (q)_k/q");
    const std::int64_t vb = nu(inst.target, f);

    TwoExceptional out;
    const Element s = f.add(f.add(a1, a2), f.scalar(k - 2));
    if (s.enc != 0) {
        out.count = base;
        out.case_id = 1;
        return out;
    }

    const bool in1 = f.in_prime_subfield(a1);
    const bool in2 = f.in_prime_subfield(a2);
    if (in1 != in2)
        throw std::logic_error("count_two_exceptional: zero-sum pair splits across F_p");

    if (!in1) {
        // Exceptional pair outside the prime subfield. The unsimplified
        // binomial form is used so the shared path has no q-p denominator.
        const std::int64_t L = (k - 2) / p;
        BigInt mass = BigInt(k - 1) * binomial(q / p - 1, L) - q * binomial(q / p - 2, L - 1);
        mass *= factorial(k - 2);
        const int sign = ((k - 1 + L) % 2 == 0) ? 1 : -1;
        out.count = base + sign * vb * mass;
        out.case_id = 2;
        return out;
    }

    // Both in F_p: indicator set A = { a1 != 1, a2 != 1,
    // {1-a1}_p + {1-a2}_p <= p }, with {x}_p the least nonnegative residue.
    const auto r1 = static_cast<std::int64_t>(a1.enc);
    const auto r2 = static_cast<std::int64_t>(a2.enc);
    auto lnr = [p](std::int64_t x) { return ((x % p) + p) % p; };
    const std::int64_t resid = lnr(1 - r1) + lnr(1 - r2);
    const bool in_A = (r1 != 1) && (r2 != 1) && (resid <= p);
    out.boundary = (r1 != 1) && (r2 != 1) && (resid == p);

    const std::int64_t L = (k - 1) / p;
    BigInt mass = BigInt(k - 1 - (in_A ? q : 0)) * binomial(q / p - 1, L);
    mass *= factorial(k - 2);
    const int sign = ((k - 1 + L) % 2 == 0) ? 1 : -1;
    out.count = base + sign * vb * mass;
    out.case_id = 3;
    return out;
}

std::optional<ClosedForm> count_closed_form(const Instance& inst) {
    require_domain_full(inst, "count_closed_form");
    const Field& f = inst.field;
    const int k = inst.k();

    // (a) all coefficients equal a common nonzero value.
    const Element first = inst.coeffs.front();
    if (first.enc != 0 &&
        std::all_of(inst.coeffs.begin(), inst.coeffs.end(), [&](Element a) { return a == first; }))
        return ClosedForm{count_all_equal(inst, first), "all-equal"};

    // (b) at most two coefficients differ from a common nonzero value.
    if (auto two = count_two_exceptional(inst))
        return ClosedForm{std::move(two->count), "two-exceptional"};

    // (c) total sum zero, every nonempty proper subset sum nonzero.
    if (k <= 20 && coeff_sum(inst.coeffs, f).enc == 0) {
        const std::uint32_t full = (1u << k) - 1;
        std::vector<std::uint32_t> sum(static_cast<std::size_t>(full) + 1, 0);
        bool ok = true;
        for (std::uint32_t mask = 1; mask < full && ok; ++mask) {
            const std::uint32_t low = mask & (~mask + 1);
            sum[mask] = f.add(Element{sum[mask ^ low]},
                              inst.coeffs[static_cast<std::size_t>(std::countr_zero(mask))])
                            .enc;
            if (sum[mask] == 0) ok = false;
        }
        if (ok) {
            const BigInt base = exact_div(
                falling_factorial(static_cast<std::int64_t>(f.q()), k), BigInt(f.q()),
                "subset-sums-nonzero (q)_k/q");
            const int sign = (k % 2 == 1) ? 1 : -1;  // (-1)^{k-1}
            return ClosedForm{base + sign * nu(inst.target, f) * factorial(k - 1),
                              "subset-sums-nonzero"};
        }
    }
    return std::nullopt;
}

namespace {

struct UnitsMemo {
    std::map<std::pair<DeltaKey, std::uint32_t>, BigInt> table;
};

BigInt count_units_rec(std::vector<Element> coeffs, Element b, const Field& f,
                       const Budgets& budgets, UnitsMemo& memo) {
    if (coeffs.empty()) return (b.enc == 0) ? 1 : 0;
    std::sort(coeffs.begin(), coeffs.end());
    auto key = std::make_pair(make_key(coeffs), b.enc);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

    Instance full_inst{f, coeffs, b, Domain::full};
    BigInt result = count_sieve(full_inst, budgets);
    for (std::size_t i = 0; i < coeffs.size();) {
        std::size_t j = i;
        while (j < coeffs.size() && coeffs[j] == coeffs[i]) ++j;
        std::vector<Element> child(coeffs);
        child.erase(child.begin() + static_cast<std::ptrdiff_t>(i));
        result -= BigInt(j - i) * count_units_rec(std::move(child), b, f, budgets, memo);
        i = j;
    }
    auto [it, inserted] = memo.table.emplace(std::move(key), std::move(result));
    return it->second;
}

}  // namespace

BigInt count_units(const Instance& inst, const Budgets& budgets) {
    if (inst.domain != Domain::units)
        throw std::invalid_argument("count_units: domain must be 'units'");
    const int k = inst.k();
    if (k > static_cast<std::int64_t>(inst.field.q()) - 1) return 0;  // pigeonhole
    if (k > budgets.units_max_k)
        throw BudgetError("count_units: k = " + std::to_string(k) +
                          " exceeds the sub-multiset budget (k <= " +
                          std::to_string(budgets.units_max_k) + ")");
    UnitsMemo memo;
    return count_units_rec(inst.coeffs, inst.target, inst.field, budgets, memo);
}

bool exists_distinct(const Instance& inst, const Budgets& budgets) {
    require_domain_full(inst, "exists_distinct");
    const Field& f = inst.field;
    const int k = inst.k();
    if (k > static_cast<std::int64_t>(f.q())) return false;

    if (inst.target.enc != 0 && f.q() >= 3) {
        // Degenerate cases: all-zero coefficients with k < q, or k = q with
        // all coefficients equal. Everything else is solvable.
        const Element first = inst.coeffs.front();
        const bool all_equal = std::all_of(inst.coeffs.begin(), inst.coeffs.end(),
                                           [&](Element a) { return a == first; });
        if (all_equal && (first.enc == 0 || k == static_cast<std::int64_t>(f.q()))) return false;
        return true;
    }
    // b = 0 has no closed classification here; count instead. Same at q = 2.
    return count_sieve(inst, budgets) > 0;
}

inline constexpr std::uint64_t kCensusMaxQ = 13;

BigInt perm_poly_census(const Field& f, const Budgets& budgets) {
    if (f.q() < 3)
        throw std::invalid_argument("perm_poly_census: needs q >= 3 (degree bound q-3 < 0)");
    if (f.q() > kCensusMaxQ)
        throw BudgetError("perm_poly_census: q = " + std::to_string(f.q()) +
                          " exceeds the census cap q <= " + std::to_string(kCensusMaxQ));
    const Element w = f.primitive_element();
    std::vector<Element> coeffs;
    coeffs.reserve(f.q() - 1);
    Element pw = f.one();
    for (std::uint64_t i = 0; i + 1 < f.q(); ++i) {
        coeffs.push_back(pw);
        pw = f.mul(pw, w);
    }
    Instance inst{f, std::move(coeffs), f.zero(), Domain::units};
    return count_units(inst, budgets);
}

BigInt perm_poly_census_interpolation(const Field& f) {
    if (f.q() < 3)
        throw std::invalid_argument("perm_poly_census_interpolation: needs q >= 3");
    if (f.q() > 9)
        throw BudgetError("perm_poly_census_interpolation: (q-1)! enumeration capped at q <= 9");

    const auto q = static_cast<std::size_t>(f.q());
    // Lagrange basis L_c for each unit c (the c = 0 term vanishes under
    // f(0) = 0), as dense coefficient vectors of length q.
    std::vector<std::vector<Element>> basis(q);
    for (std::size_t c = 1; c < q; ++c) {
        std::vector<Element> num{f.one()};  // product of (x - e), e != c
        Element denom = f.one();
        for (std::size_t e = 0; e < q; ++e) {
            if (e == c) continue;
            const Element me = f.neg(Element{static_cast<std::uint32_t>(e)});
            std::vector<Element> next(num.size() + 1, f.zero());
            for (std::size_t i = 0; i < num.size(); ++i) {
                next[i + 1] = f.add(next[i + 1], num[i]);
                next[i] = f.add(next[i], f.mul(num[i], me));
            }
            num = std::move(next);
            denom = f.mul(denom, f.sub(Element{static_cast<std::uint32_t>(c)},
                                       Element{static_cast<std::uint32_t>(e)}));
        }
        const Element scale = f.inv(denom);
        for (auto& ce : num) ce = f.mul(ce, scale);
        basis[c] = std::move(num);
    }

    std::vector<std::uint32_t> image(q - 1);
    std::iota(image.begin(), image.end(), 1);
    BigInt hits = 0;
    std::vector<Element> poly(q);
    do {
        std::fill(poly.begin(), poly.end(), f.zero());
        for (std::size_t c = 1; c < q; ++c) {
            const Element fc{image[c - 1]};
            if (fc.enc == 0) continue;
            for (std::size_t i = 0; i < q; ++i)
                poly[i] = f.add(poly[i], f.mul(fc, basis[c][i]));
        }
        int degree = -1;
        for (std::size_t i = q; i-- > 0;)
            if (poly[i].enc != 0) {
                degree = static_cast<int>(i);
                break;
            }
        if (degree <= static_cast<int>(q) - 3) ++hits;
    } while (std::next_permutation(image.begin(), image.end()));
    return hits;
}

Method method_from_string(std::string_view name) {
    if (name == "auto") return Method::automatic;
    if (name == "brute") return Method::brute;
    if (name == "recurrence") return Method::recurrence;
    if (name == "sieve") return Method::sieve;
    if (name == "partition") return Method::partition;
    if (name == "closed") return Method::closed;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string method_to_string(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::brute: return "brute";
        case Method::recurrence: return "recurrence";
        case Method::sieve: return "sieve";
        case Method::partition: return "partition";
        case Method::closed: return "closed";
    }
    std::abort();
}

CountResult count(const Instance& inst, Method method, const Budgets& budgets) {
    validate_instance(inst);
    CountResult result;
    switch (method) {
        case Method::automatic:
            if (inst.domain == Domain::units) {
                result = {count_units(inst, budgets), "units-recursion"};
            } else if (auto cf = count_closed_form(inst)) {
                result = {std::move(cf->count), "closed-form:" + cf->name};
            } else {
                result = {count_sieve(inst, budgets), "sieve-dp"};
            }
            break;
        case Method::brute:
            result = {count_brute(inst, budgets), "brute"};
            break;
        case Method::recurrence:
            result = {count_recurrence(inst), "recurrence"};
            break;
        case Method::sieve:
            result = {count_sieve(inst, budgets), "sieve-dp"};
            break;
        case Method::partition:
            result = {count_partition_oracle(inst, budgets), "partition"};
            break;
        case Method::closed: {
            auto cf = count_closed_form(inst);
            if (!cf)
                throw std::invalid_argument("count: no closed form applies to this instance");
            result = {std::move(cf->count), "closed-form:" + cf->name};
            break;
        }
    }
    const auto domain_size =
        static_cast<std::int64_t>(inst.field.q()) - (inst.domain == Domain::units);
    if (result.count < 0 || result.count > falling_factorial(domain_size, inst.k()))
        throw std::logic_error("count: result violates the 0 <= N <= (|D|)_k bound");
    return result;
}

}  // namespace dcount
