#pragma once

#include <iosfwd>

#include "grassmann/counting.hpp"
#include "grassmann/grassmannian.hpp"
#include "grassmann/io.hpp"
#include "grassmann/oracle.hpp"

namespace grassmann {

/// OpenMP variants of the heavy loops. Each partitions its index space over
/// threads and merges per-thread results in a fixed order, so results (and
/// for the enumerator, the emitted bytes) are identical to the serial
/// routines regardless of thread count. The serial routines stay the
/// reference implementations; the bench tool compares the two.

/// Per-thread partial sums over contiguous rank ranges of the pivot-sequence
/// stream, added in thread order. Exact integer addition makes the split
/// invisible.
BigCount count_pivot_sum_parallel(std::uint64_t q, std::size_t n, std::size_t d);

/// Per-thread coefficient buckets over rank ranges, merged index-wise.
QPoly coeff_poly_streaming_parallel(std::size_t n, std::size_t d);

/// Partitions the raw-tuple index space; each thread deduplicates locally,
/// and the thread-local sets merge in ascending thread order so the
/// first-tuple-wins representative rule matches the serial scan.
SubspaceSet brute_force_subspaces_parallel(const Field& field, std::size_t n, std::size_t d,
                                           std::uint64_t budget = kDefaultOracleBudget);

/// Streams the full enumeration in the documented order: strata render in
/// parallel, but flush to the stream strictly in lexicographic stratum
/// order. Byte-identical to the serial enumeration loop.
void write_grassmannian_parallel(std::ostream& out, const Field& field, std::size_t n,
                                 std::size_t d, OutputFormat fmt,
                                 const EnumerateOptions& opt = {});

/// Serial counterpart of write_grassmannian_parallel, the byte-level
/// reference for it and the CLI default path.
void write_grassmannian(std::ostream& out, const Field& field, std::size_t n, std::size_t d,
                        OutputFormat fmt, const EnumerateOptions& opt = {});

}  // namespace grassmann
