#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "grassmann/bigint.hpp"
#include "grassmann/matrix.hpp"

namespace grassmann {

/// A subspace as a plain set of vectors: the codes of all q^d members,
/// sorted ascending (zero vector included). A vector's code is
/// sum of entry_i * q^i over its components.
using Signature = std::vector<std::uint64_t>;

/// Ground-truth collection of every d-dimensional subspace of F^n, built
/// without row reduction, pivot combinatorics, or counting formulas: only
/// field arithmetic and span closure. members is sorted and duplicate-free;
/// representatives[i] is a d x n matrix spanning members[i], the first such
/// tuple in scan order.
struct SubspaceSet {
    Field field;
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<Signature> members;
    std::vector<Mat> representatives;
};

/// Raw-tuple scan limit: brute_force_subspaces refuses when q^(d*n) exceeds
/// the budget.
inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;

/// Scans all q^(d*n) d-tuples of vectors in F^n; keeps a tuple when its q^d
/// linear combinations are pairwise distinct (the rank-d test, no
/// elimination involved), records the combination set as a Signature, and
/// deduplicates. Throws BudgetExceeded, InvalidDimension.
SubspaceSet brute_force_subspaces(const Field& field, std::size_t n, std::size_t d,
                                  std::uint64_t budget = kDefaultOracleBudget);

struct CrossCheckReport {
    std::uint64_t q = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    BigCount oracle, gaussian, pivot, poly;
    bool counts_agree = false;
    bool bijection_ok = false;

    bool pass() const noexcept { return counts_agree && bijection_ok; }
};

/// Verifies that the oracle count matches all three counting routes and that
/// canonicalizing the oracle representatives is a bijection onto the
/// enumerated Grassmannian. Mismatches are reported, not thrown; only the
/// budget guard throws.
CrossCheckReport cross_check(const Field& field, std::size_t n, std::size_t d,
                             std::uint64_t budget = kDefaultOracleBudget);

namespace detail {

/// Number of raw tuples q^(d*n); throws BudgetExceeded past the budget and
/// InvalidDimension for d > n.
std::uint64_t oracle_tuple_count(const Field& field, std::size_t n, std::size_t d,
                                 std::uint64_t budget);

/// The scan kernel behind brute_force_subspaces, restricted to tuple indices
/// [begin, end): a tuple index is the d*n base-q digit string of the matrix
/// entries, row-major, last entry fastest. First tuple wins as
/// representative. Shared with the parallel driver.
std::map<Signature, std::vector<Fe>> scan_tuples(const Field& field, std::size_t n,
                                                 std::size_t d, std::uint64_t begin,
                                                 std::uint64_t end);

/// Folds a deduplicated scan result into the public shape.
SubspaceSet pack_subspace_set(const Field& field, std::size_t n, std::size_t d,
                              const std::map<Signature, std::vector<Fe>>& seen);

}  // namespace detail

}  // namespace grassmann
