#include "dcount/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dcount {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, lowest degree first, no
// trailing zeros (the zero polynomial is the empty vector).
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    trim(c);
    return c;
}

// Remainder of f modulo a monic divisor g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dg; ++i) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * g[i] % p;
                std::uint64_t cur = f[shift + i];
                f[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
            }
        }
        f.pop_back();
        trim(f);
        if (f.size() <= dg) break;
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        // Divisor candidates t^d + sum c_i t^i, c enumerated in base p.
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        Poly g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint64_t encode(const Poly& f, std::uint32_t p) {
    std::uint64_t enc = 0;
    for (std::size_t i = f.size(); i-- > 0;) enc = enc * p + f[i];
    return enc;
}

Poly decode(std::uint64_t enc, std::uint32_t p, std::uint32_t m) {
    Poly f(m, 0);
    for (std::uint32_t i = 0; i < m && enc != 0; ++i) {
        f[i] = static_cast<std::uint32_t>(enc % p);
        enc /= p;
    }
    trim(f);
    return f;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t m,
                  std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("Field::make: p = " + std::to_string(p) +
                                                  " is not prime");
    if (m < 1) throw std::invalid_argument("Field::make: extension degree m must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw std::invalid_argument("Field::make: q = p^m exceeds the 2^20 ceiling");
    }

    auto data = std::make_shared<Data>();
    data->spec.p = p;
    data->spec.m = m;
    data->spec.q = q;

    if (modulus) {
        auto& c = *modulus;
        if (c.size() != static_cast<std::size_t>(m) + 1 || c.back() != 1)
            throw std::invalid_argument("Field::make: modulus must be monic of degree m");
        for (std::uint32_t ci : c)
            if (ci >= p) throw std::invalid_argument("Field::make: modulus coefficient out of [0, p)");
        if (m == 1 && c != std::vector<std::uint32_t>{0, 1})
            throw std::invalid_argument("Field::make: prime-field modulus must be {0, 1}");
        if (!is_irreducible(c, p))
            throw std::invalid_argument("Field::make: supplied modulus is reducible over F_p");
        data->spec.modulus = std::move(c);
    } else if (m == 1) {
        data->spec.modulus = {0, 1};
    } else {
        // Lexicographic scan over (c_0, ..., c_{m-1}); c_0 is the most
        // significant coordinate.
        std::vector<std::uint32_t> c(static_cast<std::size_t>(m) + 1, 0);
        c[m] = 1;
        std::uint64_t limit = q;  // p^m candidate tuples
        bool found = false;
        for (std::uint64_t idx = 0; idx < limit; ++idx) {
            std::uint64_t t = idx;
            for (std::uint32_t i = m; i-- > 0;) {  // c_{m-1} varies fastest
                c[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (is_irreducible(c, p)) {
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("Field::make: no irreducible polynomial found");
        data->spec.modulus = c;
    }

    if (q <= kTableLimit) {
        const auto n = static_cast<std::size_t>(q);
        data->add_table.resize(n * n);
        data->mul_table.resize(n * n);
        data->neg_table.resize(n);
        data->inv_table.assign(n, 0);
        const auto& mod = data->spec.modulus;
        std::vector<Poly> polys(n);
        for (std::size_t e = 0; e < n; ++e) polys[e] = decode(e, p, m);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                Poly s(std::max(polys[a].size(), polys[b].size()), 0);
                for (std::size_t i = 0; i < polys[a].size(); ++i) s[i] = polys[a][i];
                for (std::size_t i = 0; i < polys[b].size(); ++i)
                    s[i] = (s[i] + polys[b][i]) % p;
                trim(s);
                data->add_table[a * n + b] = static_cast<std::uint32_t>(encode(s, p));
                Poly prod = poly_mod(poly_mul(polys[a], polys[b], p), mod, p);
                const auto pe = static_cast<std::uint32_t>(encode(prod, p));
                data->mul_table[a * n + b] = pe;
                if (pe == 1) data->inv_table[a] = static_cast<std::uint32_t>(b);
            }
            Poly ng = polys[a];
            for (auto& ci : ng) ci = (p - ci) % p;
            trim(ng);
            data->neg_table[a] = static_cast<std::uint32_t>(encode(ng, p));
        }
        data->has_tables = true;
    }

    return Field(std::move(data));
}

Element Field::element(std::uint64_t enc) const {
    if (enc >= q())
        throw std::invalid_argument("Field::element: encoding " + std::to_string(enc) +
                                    " out of range for q = " + std::to_string(q()));
    return Element{static_cast<std::uint32_t>(enc)};
}

Element Field::add(Element a, Element b) const {
    const auto& d = *data_;
    if (d.has_tables) return Element{d.add_table[a.enc * d.spec.q + b.enc]};
    const std::uint32_t p = d.spec.p;
    if (d.spec.m == 1) return Element{(a.enc + b.enc) % p};
    std::uint64_t ea = a.enc, eb = b.enc, out = 0, mul = 1;
    for (std::uint32_t i = 0; i < d.spec.m; ++i) {
        out += mul * ((ea % p + eb % p) % p);
        mul *= p;
        ea /= p;
        eb /= p;
    }
    return Element{static_cast<std::uint32_t>(out)};
}

Element Field::neg(Element a) const {
    const auto& d = *data_;
    if (d.has_tables) return Element{d.neg_table[a.enc]};
    const std::uint32_t p = d.spec.p;
    if (d.spec.m == 1) return Element{(p - a.enc) % p};
    std::uint64_t ea = a.enc, out = 0, mul = 1;
    for (std::uint32_t i = 0; i < d.spec.m; ++i) {
        out += mul * ((p - ea % p) % p);
        mul *= p;
        ea /= p;
    }
    return Element{static_cast<std::uint32_t>(out)};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
    const auto& d = *data_;
    if (d.has_tables) return Element{d.mul_table[a.enc * d.spec.q + b.enc]};
    const std::uint32_t p = d.spec.p;
    if (d.spec.m == 1)
        return Element{static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.enc) * b.enc % p)};
    Poly prod = poly_mod(poly_mul(decode(a.enc, p, d.spec.m), decode(b.enc, p, d.spec.m), p),
                         d.spec.modulus, p);
    return Element{static_cast<std::uint32_t>(encode(prod, p))};
}

Element Field::pow(Element a, std::uint64_t e) const {
    Element r = one();
    Element base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Element Field::inv(Element a) const {
    if (a.enc == 0) throw std::domain_error("Field::inv: inverse of zero");
    const auto& d = *data_;
    if (d.has_tables) return Element{d.inv_table[a.enc]};
    return pow(a, q() - 2);
}

Element Field::scalar(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(data_->spec.p);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Element{static_cast<std::uint32_t>(r)};
}

std::vector<Element> Field::elements(Domain domain) const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(q()));
    for (std::uint64_t e = (domain == Domain::units) ? 1 : 0; e < q(); ++e)
        out.push_back(Element{static_cast<std::uint32_t>(e)});
    return out;
}

Element Field::primitive_element() const {
    if (q() == 2) return one();
    const std::uint64_t order = q() - 1;
    const auto factors = prime_factors(order);
    for (std::uint64_t e = 1; e < q(); ++e) {
        Element x{static_cast<std::uint32_t>(e)};
        bool primitive = true;
        for (std::uint64_t f : factors) {
            if (pow(x, order / f).enc == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return x;
    }
    throw std::logic_error("Field::primitive_element: none found");  // unreachable
}

Field Field::parse(std::string_view text) {
    auto parse_u32 = [](std::string_view s, const char* what) -> std::uint32_t {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument(std::string("Field::parse: bad ") + what + " in '" +
                                        std::string(s) + "'");
        return v;
    };

    std::string_view head = text;
    std::string_view mod_part;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        head = text.substr(0, colon);
        mod_part = text.substr(colon + 1);
    }
    std::uint32_t p = 0, m = 1;
    if (auto caret = head.find('^'); caret != std::string_view::npos) {
        p = parse_u32(head.substr(0, caret), "characteristic");
        m = parse_u32(head.substr(caret + 1), "extension degree");
    } else {
        p = parse_u32(head, "characteristic");
    }
    if (mod_part.empty()) return make(p, m);

    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 0;
    while (pos <= mod_part.size()) {
        auto comma = mod_part.find(',', pos);
        auto piece = mod_part.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - pos);
        coeffs.push_back(parse_u32(piece, "modulus coefficient"));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return make(p, m, std::move(coeffs));
}

std::string Field::to_text() const {
    const auto& s = spec();
    if (s.m == 1) return std::to_string(s.p);
    std::ostringstream os;
    os << s.p << '^' << s.m << ':';
    for (std::size_t i = 0; i < s.modulus.size(); ++i) {
        if (i) os << ',';
        os << s.modulus[i];
    }
    return os.str();
}

}  // namespace dcount
