#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcount {

// A residue-class value of F_q (or, in the Z/nZ engines, an integer in
// [0, n)). The encoding of a field element is the base-p packing of the
// coefficients of its canonical degree-<m representative: sum c_i p^i.
// 0 encodes the additive identity and 1 the multiplicative identity.
struct Element {
    std::uint32_t enc = 0;
    friend auto operator<=>(const Element&, const Element&) = default;
};

enum class Domain { full, units };

// Realized field F_{p^m}: p prime, m >= 1, modulus a monic irreducible
// polynomial of degree m over F_p stored as coefficients c_0..c_m (c_m = 1).
// For m = 1 the modulus is exactly {0, 1} (the polynomial t).
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> modulus;
    std::uint64_t q = 0;
};

// Supported field sizes stop at 2^20; beyond desk scale the enumerative
// engines are useless anyway.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 20;

// Immutable realized finite field. Cheap to copy (shared payload); all
// operations are pure and safe to call concurrently.
class Field {
public:
    // Constructs F_{p^m}. If no modulus is given, picks the default: the
    // lexicographically first (c_0, c_1, ..., c_{m-1}) making
    // t^m + c_{m-1} t^{m-1} + ... + c_0 irreducible over F_p. Irreducibility
    // is decided by trial division by all monic polynomials of degree
    // 1..m/2. Throws std::invalid_argument on a non-prime p, m < 1, an
    // out-of-range or reducible supplied modulus, or q > 2^20.
    static Field make(std::uint32_t p, std::uint32_t m = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    // Parses the CLI field syntax: "p", "p^m", or "p^m:c0,c1,...,cm".
    static Field parse(std::string_view text);
    std::string to_text() const;

    const FieldSpec& spec() const { return data_->spec; }
    std::uint64_t q() const { return data_->spec.q; }
    std::uint32_t p() const { return data_->spec.p; }
    std::uint32_t m() const { return data_->spec.m; }

    Element zero() const { return Element{0}; }
    Element one() const { return Element{1}; }
    Element element(std::uint64_t enc) const;  // validates enc < q

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element mul(Element a, Element b) const;
    Element neg(Element a) const;
    Element inv(Element a) const;  // throws std::domain_error on 0
    Element pow(Element a, std::uint64_t e) const;

    // The field element 1 + 1 + ... (v times), for signed v; i.e. the image
    // of the integer v under Z -> F_q.
    Element scalar(std::int64_t v) const;

    // Ascending-encoding enumeration; units omits encoding 0.
    std::vector<Element> elements(Domain domain = Domain::full) const;

    // True iff the canonical representative has degree 0 (encoding < p).
    bool in_prime_subfield(Element a) const { return a.enc < data_->spec.p; }

    // Smallest-encoding element of multiplicative order q-1. For q = 2 this
    // is 1.
    Element primitive_element() const;

    friend bool operator==(const Field& a, const Field& b) {
        if (a.data_ == b.data_) return true;
        return a.spec().p == b.spec().p && a.spec().m == b.spec().m &&
               a.spec().modulus == b.spec().modulus;
    }

private:
    struct Data {
        FieldSpec spec;
        // Dense operation tables, built when q <= kTableLimit. The
        // enumeration oracles hammer add/mul, so tables pay off.
        std::vector<std::uint32_t> add_table;
        std::vector<std::uint32_t> mul_table;
        std::vector<std::uint32_t> neg_table;
        std::vector<std::uint32_t> inv_table;  // inv_table[0] unused
        bool has_tables = false;
    };
    static constexpr std::uint64_t kTableLimit = 256;

    explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

    std::shared_ptr<const Data> data_;
};

// Residue ring Z/nZ; elements are integers in [0, n).
struct RingSpec {
    std::uint64_t n = 1;
};

}  // namespace dcount
