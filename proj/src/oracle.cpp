#include "grassmann/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "grassmann/counting.hpp"
#include "grassmann/grassmannian.hpp"

namespace grassmann {
namespace detail {

std::uint64_t oracle_tuple_count(const Field& field, std::size_t n, std::size_t d,
                                 std::uint64_t budget) {
    if (d > n)
        throw Error(Errc::InvalidDimension, "subspace dimension " + std::to_string(d) +
                                                " exceeds ambient dimension " + std::to_string(n));
    const std::uint64_t q = field.q();
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < std::uint64_t(d) * n; ++i) {
        if (v > budget / q)
            throw Error(Errc::BudgetExceeded,
                        "oracle scan of q^(d*n) tuples exceeds the budget of " +
                            std::to_string(budget));
        v *= q;
    }
    return v;
}

std::map<Signature, std::vector<Fe>> scan_tuples(const Field& field, std::size_t n,
                                                 std::size_t d, std::uint64_t begin,
                                                 std::uint64_t end) {
    const std::uint64_t q = field.q();
    std::vector<std::uint64_t> qpow(n + 1);
    qpow[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) qpow[j] = qpow[j - 1] * q;
    const std::uint64_t combos = qpow[d];

    // decode the starting tuple into its entry digits, last entry fastest
    std::vector<Fe> entries(d * n, 0);
    std::uint64_t idx = begin;
    for (std::size_t i = entries.size(); i-- > 0;) {
        entries[i] = static_cast<Fe>(idx % q);
        idx /= q;
    }

    std::map<Signature, std::vector<Fe>> seen;
    Signature codes(combos);
    std::vector<Fe> coef(d, 0);
    std::vector<Fe> w(n);

    for (std::uint64_t t = begin; t < end; ++t) {
        // all q^d combinations of the d rows; rank d iff pairwise distinct
        std::fill(coef.begin(), coef.end(), 0);
        for (std::uint64_t c = 0; c < combos; ++c) {
            std::fill(w.begin(), w.end(), 0);
            for (std::size_t i = 0; i < d; ++i) {
                if (coef[i] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    w[j] = field.add(w[j], field.mul(coef[i], entries[i * n + j]));
                }
            }
            std::uint64_t code = 0;
            for (std::size_t j = 0; j < n; ++j) code += w[j] * qpow[j];
            codes[c] = code;
            for (std::size_t i = d; i-- > 0;) {  // next coefficient tuple
                if (++coef[i] < q) break;
                coef[i] = 0;
            }
        }
        std::sort(codes.begin(), codes.end());
        if (std::adjacent_find(codes.begin(), codes.end()) == codes.end()) {
            seen.emplace(codes, entries);
        }
        for (std::size_t i = entries.size(); i-- > 0;) {  // next tuple
            if (++entries[i] < q) break;
            entries[i] = 0;
        }
    }
    return seen;
}

SubspaceSet pack_subspace_set(const Field& field, std::size_t n, std::size_t d,
                              const std::map<Signature, std::vector<Fe>>& seen) {
    SubspaceSet out{field, n, d, {}, {}};
    out.members.reserve(seen.size());
    out.representatives.reserve(seen.size());
    for (const auto& [sig, rep] : seen) {
        out.members.push_back(sig);
        out.representatives.emplace_back(field, d, n, rep);
    }
    return out;
}

}  // namespace detail

SubspaceSet brute_force_subspaces(const Field& field, std::size_t n, std::size_t d,
                                  std::uint64_t budget) {
    const std::uint64_t tuples = detail::oracle_tuple_count(field, n, d, budget);
    return detail::pack_subspace_set(field, n, d, detail::scan_tuples(field, n, d, 0, tuples));
}

CrossCheckReport cross_check(const Field& field, std::size_t n, std::size_t d,
                             std::uint64_t budget) {
    SubspaceSet oracle = brute_force_subspaces(field, n, d, budget);
    CrossCheckReport r;
    r.q = field.q();
    r.n = n;
    r.d = d;
    r.oracle = static_cast<unsigned long>(oracle.members.size());
    r.gaussian = count_gaussian(r.q, n, d);
    r.pivot = count_pivot_sum(r.q, n, d);
    r.poly = eval_poly(coeff_poly(n, d), r.q);
    r.counts_agree = r.oracle == r.gaussian && r.gaussian == r.pivot && r.pivot == r.poly;

    // canonicalize must send the oracle's set one-to-one onto the enumerated
    // canonical forms
    bool injective = true;
    std::set<std::vector<Fe>> canon_keys;
    for (const Mat& rep : oracle.representatives) {
        Subspace s = canonicalize(rep);
        if (s.dim() != d) injective = false;
        if (!canon_keys.insert(s.canon().mat.entries()).second) injective = false;
    }
    bool onto = true;
    EnumerateOptions forced;
    forced.force = true;  // the oracle budget is the guard here
    std::size_t enumerated = 0;
    for (GrassmannianEnumerator e(field, n, d, forced); !e.done(); e.advance()) {
        ++enumerated;
        if (!canon_keys.count(e.current().mat.entries())) onto = false;
    }
    r.bijection_ok = injective && onto && enumerated == canon_keys.size() &&
                     canon_keys.size() == oracle.members.size();
    return r;
}

}  // namespace grassmann
