#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "grassmann/bigint.hpp"
#include "grassmann/matrix.hpp"

namespace grassmann {

/// Pivot-column sequence of a rank-d echelon form: d strictly increasing
/// 1-based columns with s_i <= n - d + i. For d = 0 this is the unique empty
/// sequence.
struct PivotSeq {
    std::size_t n = 0;
    std::vector<std::size_t> cols;

    std::size_t d() const noexcept { return cols.size(); }
    bool operator==(const PivotSeq& other) const = default;
};

bool is_valid(const PivotSeq& s) noexcept;

/// Lexicographic stream over all valid pivot sequences for (n, d); the total
/// number yielded is binomial(n, d). Throws InvalidDimension for d > n.
class PivotSeqEnumerator {
public:
    PivotSeqEnumerator(std::size_t n, std::size_t d);

    bool done() const noexcept { return done_; }
    const PivotSeq& current() const noexcept { return cur_; }
    void advance();

private:
    PivotSeq cur_;
    bool done_;
};

/// Lexicographic successor in place; false when s was already the last
/// sequence. Lets a worker continue a stream from an unranked start.
bool next_pivot_seq(PivotSeq& s) noexcept;

/// Materialized pivot_sequences stream; intended for small n.
std::vector<PivotSeq> pivot_sequences(std::size_t n, std::size_t d);

/// idx-th sequence (0-based) in the lexicographic order, via the
/// combinatorial number system. Lets parallel workers start mid-stream.
PivotSeq pivot_seq_unrank(std::size_t n, std::size_t d, std::uint64_t idx);

/// Count of free entries in an echelon form with pivots s: per row i this is
/// n - d - (s_i - i), each term nonnegative, summing to
/// d(n-d) + d(d+1)/2 - sum(s_i).
std::uint64_t stratum_exponent(const PivotSeq& s);

/// q^stratum_exponent(s), exact. Validates that q is a prime power; no field
/// is constructed, so q may exceed the field-order envelope.
BigCount stratum_size(const PivotSeq& s, std::uint64_t q);

/// Rank-d echelon form stored as its d nonzero rows (d x n). The paper-style
/// square presentation is padded_square. Invariant: is_rref(mat), no zero
/// rows, pivots lists the leading-entry columns.
struct EchelonForm {
    Mat mat;
    PivotSeq pivots;

    std::size_t n() const noexcept { return mat.cols(); }
    std::size_t d() const noexcept { return mat.rows(); }
};

/// n x n presentation: the d nonzero rows on top, n - d zero rows below.
Mat padded_square(const EchelonForm& e);

/// A subspace of F^n, identified with its unique echelon-form representative.
/// Equality is entry-wise equality of representatives; distinct subspaces
/// always have distinct representatives.
class Subspace {
public:
    explicit Subspace(EchelonForm canon) : canon_(std::move(canon)) {}

    const EchelonForm& canon() const noexcept { return canon_; }
    std::size_t dim() const noexcept { return canon_.d(); }
    std::size_t ambient() const noexcept { return canon_.n(); }

    /// Membership test. Throws DimensionMismatch for wrong-length v.
    bool contains(const std::vector<Fe>& v) const;

    /// Entry-wise representative comparison; false on any field or ambient
    /// mismatch rather than throwing.
    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }

private:
    EchelonForm canon_;
};

/// Like operator== but treats a field or ambient-dimension mismatch as an
/// error (FieldMismatch, DimensionMismatch) instead of inequality.
bool subspace_equal(const Subspace& a, const Subspace& b);

/// Canonical representative of the row space of a: the nonzero rows of
/// rref(a). Constant on row-equivalence classes, injective across distinct
/// row spaces. Rows of a need not be independent.
Subspace canonicalize(const Mat& a);

/// Guard knobs for the enumeration streams. The cap bounds the number of
/// yielded items; force disables the guard.
struct EnumerateOptions {
    static inline const BigCount kDefaultCap = 10'000'000;

    BigCount cap = kDefaultCap;
    bool force = false;
};

/// All rank-d echelon forms with pivot columns exactly s, enumerated by
/// filling the free positions row-major with every value assignment, the
/// last position varying fastest, element codes ascending. Throws
/// EnumerationTooLarge when stratum_size exceeds the cap without force,
/// ValueOutOfRange for an invalid s.
class StratumEnumerator {
public:
    StratumEnumerator(Field field, PivotSeq s, const EnumerateOptions& opt = {});

    bool done() const noexcept { return done_; }
    const EchelonForm& current() const noexcept { return cur_; }
    void advance();

    const BigCount& total() const noexcept { return total_; }

private:
    Field field_;
    EchelonForm cur_;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos_;  // row-major
    BigCount total_;
    bool done_;
};

/// Every d-dimensional subspace of F^n exactly once, as its canonical
/// echelon form: strata in lexicographic pivot order, stratum-internal order
/// as in StratumEnumerator. The cap guard is applied to the full Grassmannian
/// size up front, before anything is yielded. Throws InvalidDimension,
/// EnumerationTooLarge.
class GrassmannianEnumerator {
public:
    GrassmannianEnumerator(Field field, std::size_t n, std::size_t d,
                           const EnumerateOptions& opt = {});

    bool done() const noexcept { return !stratum_.has_value(); }
    const EchelonForm& current() const noexcept { return stratum_->current(); }
    void advance();

    /// Pivot sequence of the stratum currently being emitted.
    const PivotSeq& current_stratum() const noexcept { return seqs_.current(); }

private:
    void settle();

    Field field_;
    PivotSeqEnumerator seqs_;
    std::optional<StratumEnumerator> stratum_;
};

}  // namespace grassmann
