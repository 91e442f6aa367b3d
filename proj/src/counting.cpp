#include "grassmann/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "grassmann/field.hpp"
#include "grassmann/grassmannian.hpp"

namespace grassmann {

BigCount binomial(std::size_t n, std::size_t d) {
    if (d > n) return 0;
    if (d > n - d) d = n - d;
    std::vector<BigCount> row(d + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, d); j > 0; --j) row[j] += row[j - 1];
    }
    return row[d];
}

namespace {

void require_dims(std::size_t n, std::size_t d) {
    if (d > n)
        throw Error(Errc::InvalidDimension, "subspace dimension " + std::to_string(d) +
                                                " exceeds ambient dimension " + std::to_string(n));
}

BigCount pow_big(std::uint64_t q, std::uint64_t e) {
    BigCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
    return out;
}

}  // namespace

BigCount count_gaussian(std::uint64_t q, std::size_t n, std::size_t d) {
    parse_order(q);
    require_dims(n, d);
    BigCount num = 1, den = 1;
    const BigCount qn = pow_big(q, n), qd = pow_big(q, d);
    for (std::size_t i = 0; i < d; ++i) {
        const BigCount qi = pow_big(q, i);
        num *= qn - qi;
        den *= qd - qi;
    }
    BigCount quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // the quotient is integral for every prime power; a nonzero remainder
    // means the formula was evaluated wrongly, not bad input
    if (rem != 0) throw std::logic_error("Gaussian product quotient left a remainder");
    return quot;
}

BigCount count_pivot_sum(std::uint64_t q, std::size_t n, std::size_t d) {
    parse_order(q);
    require_dims(n, d);
    // powers q^0 .. q^(d(n-d)) up front; the sum itself stays term by term
    std::vector<BigCount> qpow(d * (n - d) + 1);
    qpow[0] = 1;
    for (std::size_t e = 1; e < qpow.size(); ++e) qpow[e] = qpow[e - 1] * q;
    BigCount total = 0;
    for (PivotSeqEnumerator e(n, d); !e.done(); e.advance()) {
        total += qpow[stratum_exponent(e.current())];
    }
    return total;
}

QPoly coeff_poly(std::size_t n, std::size_t d) {
    require_dims(n, d);
    // dp[j][e] counts pivot sequences for (i, j) whose exponent is e, in
    // ascending powers; the recurrence adds the new-column term shifted by
    // q^(i-j). Rolling over i keeps one row per j.
    std::vector<std::vector<BigCount>> dp(d + 1);
    dp[0] = {1};
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, d); j > 0; --j) {
            const std::size_t deg = j * (i - j);
            std::vector<BigCount> next(deg + 1, 0);
            if (j < i) {  // sequences not using column i; same exponents
                const auto& keep = dp[j];
                for (std::size_t e = 0; e < keep.size(); ++e) next[e] += keep[e];
            }
            const auto& take = dp[j - 1];  // column i becomes pivot j
            const std::size_t shift = i - j;
            for (std::size_t e = 0; e < take.size(); ++e) next[e + shift] += take[e];
            dp[j] = std::move(next);
        }
    }
    // store highest power first: coeffs[l] multiplies q^(m-l)
    QPoly p{n, d, {}};
    const auto& asc = dp[d];
    p.coeffs.assign(asc.rbegin(), asc.rend());
    return p;
}

QPoly coeff_poly_streaming(std::size_t n, std::size_t d) {
    require_dims(n, d);
    QPoly p{n, d, std::vector<BigCount>(d * (n - d) + 1, 0)};
    const std::size_t m = d * (n - d);
    for (PivotSeqEnumerator e(n, d); !e.done(); e.advance()) {
        p.coeffs[m - stratum_exponent(e.current())] += 1;
    }
    return p;
}

BigCount eval_poly(const QPoly& p, std::uint64_t q) {
    BigCount acc = 0;
    for (const BigCount& c : p.coeffs) {
        acc *= q;
        acc += c;
    }
    return acc;
}

CountMethod parse_method(std::string_view text) {
    if (text == "gaussian") return CountMethod::Gaussian;
    if (text == "pivot") return CountMethod::Pivot;
    if (text == "poly") return CountMethod::Poly;
    throw Error(Errc::ParseError, "unknown method '" + std::string(text) +
                                      "' (expected gaussian, pivot, or poly)");
}

BigCount count(std::uint64_t q, std::size_t n, std::size_t d, CountMethod method) {
    switch (method) {
        case CountMethod::Gaussian:
            return count_gaussian(q, n, d);
        case CountMethod::Pivot:
            return count_pivot_sum(q, n, d);
        case CountMethod::Poly:
            parse_order(q);
            require_dims(n, d);
            return eval_poly(coeff_poly(n, d), q);
    }
    throw Error(Errc::ParseError, "unknown method");
}

}  // namespace grassmann
