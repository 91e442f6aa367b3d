#include "grassmann/field.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <string>

namespace grassmann {
namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

// Polynomials over GF(p) as coefficient vectors, degree 0 first.
using Poly = std::vector<std::uint32_t>;

std::uint32_t poly_eval(const Poly& f, std::uint32_t x, std::uint32_t p) {
    std::uint64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
    return static_cast<std::uint32_t>(acc);
}

// Remainder of f by a monic divisor.
Poly poly_rem(Poly f, const Poly& div, std::uint32_t p) {
    const auto dd = div.size() - 1;
    while (f.size() > dd) {
        const std::uint64_t lead = f.back();
        if (lead != 0) {
            const auto shift = f.size() - 1 - dd;
            for (std::size_t i = 0; i < dd; ++i) {
                const std::uint64_t take = (p - div[i]) * lead % p;
                f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + take) % p);
            }
        }
        f.pop_back();
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

bool is_zero(const Poly& f) { return f.empty(); }

// Exhaustive test: no roots, no monic divisor of degree 2..k/2. Fields here
// are small, so trial division beats anything cleverer.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const auto k = f.size() - 1;
    if (k == 1) return true;
    for (std::uint32_t x = 0; x < p; ++x) {
        if (poly_eval(f, x, p) == 0) return false;
    }
    for (std::size_t deg = 2; deg <= k / 2; ++deg) {
        Poly div(deg + 1, 0);
        div[deg] = 1;
        while (true) {
            if (is_zero(poly_rem(f, div, p))) return false;
            // next monic divisor, low coefficient varies fastest
            std::size_t i = 0;
            while (i < deg && ++div[i] == p) div[i++] = 0;
            if (i == deg) break;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k, ordered by the
// tuple (a_0, ..., a_{k-1}).
Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
    Poly f(k + 1, 0);
    f[k] = 1;
    while (true) {
        if (is_irreducible(f, p)) return f;
        // lex successor: a_{k-1} varies fastest
        std::size_t i = 0;
        while (i < k && ++f[k - 1 - i] == p) f[k - 1 - i] = 0, ++i;
        assert(i < k && "no irreducible polynomial found");
    }
}

}  // namespace

struct Field::Impl {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<Fe> modulus;

    // k > 1 only:
    std::vector<std::uint8_t> digits;   // q * k base-p digits
    std::vector<std::uint32_t> p_pow;   // p^0 .. p^k
    std::vector<Fe> exp_table;          // g^i for i in [0, 2(q-1)), wraps once
    std::vector<std::uint32_t> log_table;  // log_g a for a in [1, q)

    Fe mul_poly(Fe a, Fe b) const {
        // convolve digits, then reduce x^k -> -(m_0 + ... + m_{k-1} x^{k-1})
        std::uint32_t buf[64] = {0};
        const std::uint8_t* da = &digits[std::size_t(a) * k];
        const std::uint8_t* db = &digits[std::size_t(b) * k];
        for (std::uint32_t i = 0; i < k; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < k; ++j)
                buf[i + j] = (buf[i + j] + std::uint32_t(da[i]) * db[j]) % p;
        }
        for (std::uint32_t idx = 2 * k - 2; idx >= k; --idx) {
            const std::uint32_t c = buf[idx];
            if (c == 0) continue;
            buf[idx] = 0;
            for (std::uint32_t i = 0; i < k; ++i)
                buf[idx - k + i] = (buf[idx - k + i] + c * (p - modulus[i])) % p;
        }
        Fe code = 0;
        for (std::uint32_t i = 0; i < k; ++i) code += buf[i] * p_pow[i];
        return code;
    }

    void build_tables() {
        digits.resize(std::size_t(q) * k);
        for (std::uint32_t a = 0; a < q; ++a) {
            std::uint32_t v = a;
            for (std::uint32_t i = 0; i < k; ++i) {
                digits[std::size_t(a) * k + i] = static_cast<std::uint8_t>(v % p);
                v /= p;
            }
        }
        // find a generator of the unit group
        Fe g = 0;
        for (Fe cand = 2; cand < q; ++cand) {
            std::uint32_t order = 1;
            Fe x = cand;
            while (x != 1) {
                x = mul_poly(x, cand);
                ++order;
            }
            if (order == q - 1) {
                g = cand;
                break;
            }
        }
        assert(g != 0 && "unit group of a finite field is cyclic");
        exp_table.resize(2 * (q - 1));
        log_table.assign(q, 0);
        Fe x = 1;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            exp_table[i] = x;
            exp_table[i + (q - 1)] = x;
            log_table[x] = i;
            x = mul_poly(x, g);
        }
    }
};

std::uint32_t Field::p() const noexcept { return impl_->p; }
std::uint32_t Field::k() const noexcept { return impl_->k; }
std::uint32_t Field::q() const noexcept { return impl_->q; }
const std::vector<Fe>& Field::modulus() const noexcept { return impl_->modulus; }

Fe Field::add(Fe a, Fe b) const {
    const auto& f = *impl_;
    assert(a < f.q && b < f.q);
    if (f.k == 1) {
        const std::uint32_t s = a + b;
        return s >= f.q ? s - f.q : s;
    }
    if (f.p == 2) return a ^ b;
    Fe code = 0;
    const std::uint8_t* da = &f.digits[std::size_t(a) * f.k];
    const std::uint8_t* db = &f.digits[std::size_t(b) * f.k];
    for (std::uint32_t i = 0; i < f.k; ++i) {
        std::uint32_t s = std::uint32_t(da[i]) + db[i];
        if (s >= f.p) s -= f.p;
        code += s * f.p_pow[i];
    }
    return code;
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::neg(Fe a) const {
    const auto& f = *impl_;
    assert(a < f.q);
    if (f.k == 1) return a == 0 ? 0 : f.q - a;
    if (f.p == 2) return a;
    Fe code = 0;
    const std::uint8_t* da = &f.digits[std::size_t(a) * f.k];
    for (std::uint32_t i = 0; i < f.k; ++i) {
        const std::uint32_t d = da[i];
        code += (d == 0 ? 0 : f.p - d) * f.p_pow[i];
    }
    return code;
}

Fe Field::mul(Fe a, Fe b) const {
    const auto& f = *impl_;
    assert(a < f.q && b < f.q);
    if (f.k == 1) return static_cast<Fe>(std::uint64_t(a) * b % f.q);
    if (a == 0 || b == 0) return 0;
    return f.exp_table[f.log_table[a] + f.log_table[b]];
}

Fe Field::mul_ref(Fe a, Fe b) const {
    const auto& f = *impl_;
    assert(a < f.q && b < f.q);
    if (f.k == 1) return static_cast<Fe>(std::uint64_t(a) * b % f.q);
    return f.mul_poly(a, b);
}

Fe Field::inv(Fe a) const {
    const auto& f = *impl_;
    assert(a < f.q);
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (f.k == 1) return pow(a, f.q - 2);
    return f.exp_table[(f.q - 1) - f.log_table[a]];
}

Fe Field::pow(Fe a, std::uint64_t e) const {
    const auto& f = *impl_;
    assert(a < f.q);
    if (a == 0) return e == 0 ? 1 : 0;
    if (f.k == 1) {
        std::uint64_t base = a, acc = 1;
        while (e > 0) {
            if (e & 1) acc = acc * base % f.q;
            base = base * base % f.q;
            e >>= 1;
        }
        return static_cast<Fe>(acc);
    }
    const std::uint64_t ord = f.q - 1;
    return f.exp_table[f.log_table[a] * (e % ord) % ord];
}

bool Field::operator==(const Field& other) const noexcept {
    return impl_ == other.impl_ || (impl_->p == other.impl_->p && impl_->k == other.impl_->k);
}

Field make_field(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(Errc::InvalidDegree, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw Error(Errc::FieldTooLarge, "field order exceeds the supported maximum " +
                                                 std::to_string(kMaxFieldOrder));
    }
    auto impl = std::make_shared<Field::Impl>();
    impl->p = p;
    impl->k = k;
    impl->q = static_cast<std::uint32_t>(q);
    impl->p_pow.resize(k + 1);
    impl->p_pow[0] = 1;
    for (std::uint32_t i = 1; i <= k; ++i) impl->p_pow[i] = impl->p_pow[i - 1] * p;
    if (k == 1) {
        impl->modulus = {0, 1};  // x, unused by the arithmetic
    } else {
        Poly m = smallest_irreducible(p, k);
        impl->modulus.assign(m.begin(), m.end());
        impl->build_tables();
    }
    return Field(std::move(impl));
}

std::pair<std::uint64_t, std::uint32_t> parse_order(std::uint64_t q) {
    if (q < 2) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (q > (1ull << 48))
        throw Error(Errc::FieldTooLarge, std::to_string(q) + " exceeds the supported range");
    std::uint64_t p = 0;
    for (std::uint64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0) p = q;  // q itself is prime
    std::uint32_t k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    return {p, k};
}

Field field_from_order(std::uint64_t q) {
    auto [p, k] = parse_order(q);
    if (p > kMaxFieldOrder)
        throw Error(Errc::FieldTooLarge, "field order " + std::to_string(q) +
                                             " exceeds the supported maximum " +
                                             std::to_string(kMaxFieldOrder));
    return make_field(static_cast<std::uint32_t>(p), k);
}

namespace {

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw Error(Errc::ParseError, "invalid number '" + std::string(s) + "'");
    return v;
}

}  // namespace

Field parse_field(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw Error(Errc::ParseError, "empty field specifier");
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) return field_from_order(parse_u64(text));
    const std::uint64_t p = parse_u64(text.substr(0, caret));
    const std::uint64_t k = parse_u64(text.substr(caret + 1));
    if (p > kMaxFieldOrder)
        throw Error(Errc::FieldTooLarge, "characteristic exceeds the supported range");
    if (k > 64) throw Error(Errc::FieldTooLarge, "extension degree exceeds the supported range");
    return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
}

std::uint64_t parse_order_text(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw Error(Errc::ParseError, "empty field specifier");
    const auto caret = text.find('^');
    std::uint64_t q;
    if (caret == std::string_view::npos) {
        q = parse_u64(text);
    } else {
        const std::uint64_t p = parse_u64(text.substr(0, caret));
        const std::uint64_t k = parse_u64(text.substr(caret + 1));
        if (p > (1ull << 48))
            throw Error(Errc::FieldTooLarge, std::string(text) + " exceeds the supported range");
        if (!is_prime(p) || k < 1 || k > 64)
            throw Error(Errc::NotPrimePower, std::string(text) + " is not a prime power");
        q = 1;
        for (std::uint64_t i = 0; i < k; ++i) {
            if (q > (1ull << 48) / p)
                throw Error(Errc::FieldTooLarge,
                            std::string(text) + " exceeds the supported range");
            q *= p;
        }
    }
    parse_order(q);  // prime-power validation
    return q;
}

}  // namespace grassmann
