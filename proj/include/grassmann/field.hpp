#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "grassmann/error.hpp"

namespace grassmann {

/// Field element code in [0, q). For GF(p^k) the code's base-p digits are the
/// coefficients of the element as a polynomial in the generator x, least
/// significant digit first; for k = 1 the code is the residue itself.
using Fe = std::uint32_t;

/// Largest supported field order. Keeps table construction and exhaustive
/// modulus search cheap; enumeration workloads live far below this anyway.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

/// A concrete finite field GF(p^k). Immutable after construction and cheap to
/// copy (internals are shared). All operations are pure, so a Field may be
/// used from any number of threads.
///
/// The modulus polynomial is deterministic: the lexicographically smallest
/// monic irreducible polynomial of degree k over GF(p), ordered by the
/// coefficient tuple (a_0, ..., a_{k-1}). Two constructions of GF(p^k) are
/// therefore identical, including element encodings.
class Field {
public:
    std::uint32_t p() const noexcept;
    std::uint32_t k() const noexcept;
    std::uint32_t q() const noexcept;

    /// Coefficient codes of the modulus polynomial, degree 0 first, length
    /// k + 1, monic. For k = 1 this is x, i.e. {0, 1}.
    const std::vector<Fe>& modulus() const noexcept;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;  // throws DivisionByZero for a = 0
    Fe pow(Fe a, std::uint64_t e) const;

    /// Table-free multiplication: polynomial multiply and reduce modulo the
    /// modulus (direct modular product for k = 1). mul() may be backed by
    /// log/antilog tables; this is the reference route it must agree with.
    Fe mul_ref(Fe a, Fe b) const;

    bool operator==(const Field& other) const noexcept;
    bool operator!=(const Field& other) const noexcept { return !(*this == other); }

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;

    friend Field make_field(std::uint32_t p, std::uint32_t k);
};

/// Builds GF(p^k). Throws NonPrime, InvalidDegree, or FieldTooLarge.
Field make_field(std::uint32_t p, std::uint32_t k);

/// Splits a prime power q into (p, k). Throws NotPrimePower for anything
/// else (including q < 2) and FieldTooLarge beyond 2^48, where the factoring
/// scan stops being cheap. Field construction applies its own, much smaller
/// order limit; counting code accepts this full range.
std::pair<std::uint64_t, std::uint32_t> parse_order(std::uint64_t q);

/// make_field(parse_order(q)).
Field field_from_order(std::uint64_t q);

/// Accepts a field given as an order ("9") or as "p^k" ("3^2").
Field parse_field(std::string_view text);

/// Same syntax as parse_field, but returns the validated prime-power order
/// without constructing a field, so counting-only callers are not bound by
/// the field-order envelope.
std::uint64_t parse_order_text(std::string_view text);

}  // namespace grassmann
