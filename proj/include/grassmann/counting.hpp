#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "grassmann/bigint.hpp"

namespace grassmann {

/// Ordinary binomial coefficient, exact, by the Pascal recurrence (no
/// factorials, no divisions).
BigCount binomial(std::size_t n, std::size_t d);

/// Coefficients of |Gr(d,n)| as a polynomial in the field order:
/// |Gr(d,n)| = sum over l of coeffs[l] * q^(d(n-d) - l).
/// coeffs[l] counts the pivot sequences with column sum l + d(d+1)/2.
struct QPoly {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<BigCount> coeffs;  // length d(n-d) + 1

    std::size_t degree() const noexcept { return coeffs.size() - 1; }
    bool operator==(const QPoly& other) const = default;
};

/// Product formula: prod(q^n - q^i) / prod(q^d - q^i) for i < d, evaluated
/// as one exact division whose remainder is checked to be zero. Validates
/// that q is a prime power and d <= n.
BigCount count_gaussian(std::uint64_t q, std::size_t n, std::size_t d);

/// Stratification formula: sum of q^stratum_exponent(s) over all pivot
/// sequences, term by term. Same validation as count_gaussian.
BigCount count_pivot_sum(std::uint64_t q, std::size_t n, std::size_t d);

/// Coefficient polynomial via the Pascal-style recurrence
/// P(n,d) = P(n-1,d) + q^(n-d) * P(n-1,d-1) on coefficient vectors.
/// Matches coeff_poly_streaming exactly.
QPoly coeff_poly(std::size_t n, std::size_t d);

/// Definitional route: stream every pivot sequence and bucket by column sum.
/// Kept as the reference implementation for coeff_poly.
QPoly coeff_poly_streaming(std::size_t n, std::size_t d);

/// Horner evaluation, exact. q = 1 is allowed (yields binomial(n, d)); no
/// prime-power check here, the polynomial is a formal object.
BigCount eval_poly(const QPoly& p, std::uint64_t q);

enum class CountMethod { Gaussian, Pivot, Poly };

/// Parses "gaussian", "pivot", or "poly". Throws ParseError.
CountMethod parse_method(std::string_view text);

/// Dispatch over the three routes. All require a prime-power q, including
/// Poly (the formula counts subspaces, so a field of order q must exist).
BigCount count(std::uint64_t q, std::size_t n, std::size_t d, CountMethod method);

}  // namespace grassmann
