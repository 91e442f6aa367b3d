#include "grassmann/parallel.hpp"

#include <omp.h>

#include <ostream>
#include <string>

namespace grassmann {
namespace {

void require_dims(std::size_t n, std::size_t d) {
    if (d > n)
        throw Error(Errc::InvalidDimension, "subspace dimension " + std::to_string(d) +
                                                " exceeds ambient dimension " + std::to_string(n));
}

// [begin, end) of a size-`total` index space for worker t of T
std::pair<std::uint64_t, std::uint64_t> chunk(std::uint64_t total, int t, int T) {
    const std::uint64_t base = total / T, extra = total % T;
    const std::uint64_t begin =
        base * std::uint64_t(t) + std::min<std::uint64_t>(t, extra);
    return {begin, begin + base + (std::uint64_t(t) < extra ? 1 : 0)};
}

}  // namespace

BigCount count_pivot_sum_parallel(std::uint64_t q, std::size_t n, std::size_t d) {
    parse_order(q);
    require_dims(n, d);
    const BigCount total_big = binomial(n, d);
    if (!total_big.fits_ulong_p()) return count_pivot_sum(q, n, d);
    const std::uint64_t total = total_big.get_ui();

    std::vector<BigCount> qpow(d * (n - d) + 1);
    qpow[0] = 1;
    for (std::size_t e = 1; e < qpow.size(); ++e) qpow[e] = qpow[e - 1] * q;

    std::vector<BigCount> partial;
#pragma omp parallel
    {
#pragma omp single
        partial.assign(omp_get_num_threads(), 0);
        const int t = omp_get_thread_num();
        const auto [begin, end] = chunk(total, t, omp_get_num_threads());
        BigCount local = 0;
        if (begin < end) {
            PivotSeq s = pivot_seq_unrank(n, d, begin);
            for (std::uint64_t r = begin;;) {
                local += qpow[stratum_exponent(s)];
                if (++r == end) break;
                next_pivot_seq(s);
            }
        }
        partial[t] = std::move(local);
    }
    BigCount sum = 0;
    for (const BigCount& p : partial) sum += p;
    return sum;
}

QPoly coeff_poly_streaming_parallel(std::size_t n, std::size_t d) {
    require_dims(n, d);
    const BigCount total_big = binomial(n, d);
    if (!total_big.fits_ulong_p()) return coeff_poly_streaming(n, d);
    const std::uint64_t total = total_big.get_ui();
    const std::size_t m = d * (n - d);

    std::vector<std::vector<BigCount>> buckets;
#pragma omp parallel
    {
#pragma omp single
        buckets.assign(omp_get_num_threads(), {});
        const int t = omp_get_thread_num();
        const auto [begin, end] = chunk(total, t, omp_get_num_threads());
        std::vector<BigCount> local(m + 1, 0);
        if (begin < end) {
            PivotSeq s = pivot_seq_unrank(n, d, begin);
            for (std::uint64_t r = begin;;) {
                local[m - stratum_exponent(s)] += 1;
                if (++r == end) break;
                next_pivot_seq(s);
            }
        }
        buckets[t] = std::move(local);
    }
    QPoly p{n, d, std::vector<BigCount>(m + 1, 0)};
    for (const auto& local : buckets) {
        for (std::size_t l = 0; l <= m; ++l) p.coeffs[l] += local[l];
    }
    return p;
}

SubspaceSet brute_force_subspaces_parallel(const Field& field, std::size_t n, std::size_t d,
                                           std::uint64_t budget) {
    const std::uint64_t tuples = detail::oracle_tuple_count(field, n, d, budget);

    std::vector<std::map<Signature, std::vector<Fe>>> locals;
#pragma omp parallel
    {
#pragma omp single
        locals.resize(omp_get_num_threads());
        const int t = omp_get_thread_num();
        const auto [begin, end] = chunk(tuples, t, omp_get_num_threads());
        locals[t] = detail::scan_tuples(field, n, d, begin, end);
    }
    // ascending thread order keeps the serial first-tuple-wins rule
    std::map<Signature, std::vector<Fe>> seen = std::move(locals.front());
    for (std::size_t t = 1; t < locals.size(); ++t) {
        for (auto& [sig, rep] : locals[t]) seen.emplace(sig, std::move(rep));
    }
    return detail::pack_subspace_set(field, n, d, seen);
}

void write_grassmannian(std::ostream& out, const Field& field, std::size_t n, std::size_t d,
                        OutputFormat fmt, const EnumerateOptions& opt) {
    bool first = true;
    for (GrassmannianEnumerator e(field, n, d, opt); !e.done(); e.advance()) {
        if (fmt == OutputFormat::Text && !first) out << kRecordSeparator;
        out << render_record(e.current(), fmt);
        first = false;
    }
}

void write_grassmannian_parallel(std::ostream& out, const Field& field, std::size_t n,
                                 std::size_t d, OutputFormat fmt, const EnumerateOptions& opt) {
    // same up-front guard as the serial enumerator
    if (!opt.force) {
        const BigCount total = count_gaussian(field.q(), n, d);
        if (total > opt.cap)
            throw Error(Errc::EnumerationTooLarge,
                        "enumeration of " + total.get_str() + " subspaces exceeds the cap of " +
                            opt.cap.get_str() + "; raise the cap or force to proceed");
    }
    if (!binomial(n, d).fits_ulong_p()) {  // index space too wide to schedule
        write_grassmannian(out, field, n, d, fmt, opt);
        return;
    }
    const std::vector<PivotSeq> seqs = pivot_sequences(n, d);
    EnumerateOptions forced;
    forced.force = true;

    // strata render concurrently but flush in lexicographic order, so the
    // byte stream matches the serial writer exactly
#pragma omp parallel for ordered schedule(dynamic, 1)
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        std::string buf;
        bool first = true;
        for (StratumEnumerator se(field, seqs[i], forced); !se.done(); se.advance()) {
            if (fmt == OutputFormat::Text && !first) buf += kRecordSeparator;
            buf += render_record(se.current(), fmt);
            first = false;
        }
#pragma omp ordered
        {
            if (fmt == OutputFormat::Text && i > 0) out << kRecordSeparator;
            out << buf;
        }
    }
}

}  // namespace grassmann
