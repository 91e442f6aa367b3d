#include "grassmann/grassmannian.hpp"

#include <cassert>
#include <string>

#include "grassmann/counting.hpp"

namespace grassmann {

bool is_valid(const PivotSeq& s) noexcept {
    const std::size_t n = s.n;
    const std::size_t d = s.cols.size();
    if (d > n) return false;
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t lo = i == 0 ? 1 : s.cols[i - 1] + 1;
        if (s.cols[i] < lo || s.cols[i] > n - d + i + 1) return false;
    }
    return true;
}

PivotSeqEnumerator::PivotSeqEnumerator(std::size_t n, std::size_t d) : done_(false) {
    if (d > n)
        throw Error(Errc::InvalidDimension, "subspace dimension " + std::to_string(d) +
                                                " exceeds ambient dimension " + std::to_string(n));
    cur_.n = n;
    cur_.cols.resize(d);
    for (std::size_t i = 0; i < d; ++i) cur_.cols[i] = i + 1;
}

bool next_pivot_seq(PivotSeq& s) noexcept {
    auto& c = s.cols;
    const std::size_t n = s.n;
    const std::size_t d = c.size();
    // rightmost position that can still move
    std::size_t i = d;
    while (i-- > 0) {
        if (c[i] < n - d + i + 1) {
            ++c[i];
            for (std::size_t j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void PivotSeqEnumerator::advance() {
    assert(!done_);
    done_ = !next_pivot_seq(cur_);
}

std::vector<PivotSeq> pivot_sequences(std::size_t n, std::size_t d) {
    std::vector<PivotSeq> out;
    for (PivotSeqEnumerator e(n, d); !e.done(); e.advance()) out.push_back(e.current());
    return out;
}

PivotSeq pivot_seq_unrank(std::size_t n, std::size_t d, std::uint64_t idx) {
    if (d > n)
        throw Error(Errc::InvalidDimension, "subspace dimension " + std::to_string(d) +
                                                " exceeds ambient dimension " + std::to_string(n));
    BigCount rem = static_cast<unsigned long>(idx);
    if (rem >= binomial(n, d))
        throw Error(Errc::ValueOutOfRange, "sequence index " + std::to_string(idx) +
                                               " out of range for (" + std::to_string(n) + ", " +
                                               std::to_string(d) + ")");
    PivotSeq s;
    s.n = n;
    s.cols.reserve(d);
    std::size_t next = 1;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t v = next;; ++v) {
            // sequences continuing (.., v, ..): choose d-i-1 larger columns
            BigCount block = binomial(n - v, d - i - 1);
            if (rem < block) {
                s.cols.push_back(v);
                next = v + 1;
                break;
            }
            rem -= block;
        }
    }
    return s;
}

std::uint64_t stratum_exponent(const PivotSeq& s) {
    if (!is_valid(s))
        throw Error(Errc::ValueOutOfRange, "invalid pivot sequence");
    const std::size_t n = s.n;
    const std::size_t d = s.cols.size();
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < d; ++i) e += n - d - (s.cols[i] - (i + 1));
    return e;
}

BigCount stratum_size(const PivotSeq& s, std::uint64_t q) {
    parse_order(q);  // prime-power validation only
    const std::uint64_t e = stratum_exponent(s);
    BigCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
    return out;
}

Mat padded_square(const EchelonForm& e) {
    Mat out(e.mat.field(), e.n(), e.n());
    for (std::size_t i = 0; i < e.d(); ++i) {
        for (std::size_t j = 0; j < e.n(); ++j) out.set(i, j, e.mat.at(i, j));
    }
    return out;
}

bool Subspace::contains(const std::vector<Fe>& v) const {
    for (Fe x : v) {
        if (x >= canon_.mat.field().q())
            throw Error(Errc::ValueOutOfRange, "entry code " + std::to_string(x) +
                                                   " outside field of order " +
                                                   std::to_string(canon_.mat.field().q()));
    }
    RrefResult r{canon_.mat, canon_.d(), canon_.pivots.cols};
    return row_space_contains(r, v);
}

bool Subspace::operator==(const Subspace& other) const {
    return canon_.mat == other.canon_.mat;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.canon().mat.field() != b.canon().mat.field())
        throw Error(Errc::FieldMismatch, "subspaces over different fields");
    if (a.ambient() != b.ambient())
        throw Error(Errc::DimensionMismatch, "ambient dimensions " + std::to_string(a.ambient()) +
                                                 " and " + std::to_string(b.ambient()) +
                                                 " differ");
    return a == b;
}

Subspace canonicalize(const Mat& a) {
    RrefResult r = rref(a);
    Mat top(a.field(), r.rank, a.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) top.set(i, j, r.rref.at(i, j));
    }
    return Subspace(EchelonForm{std::move(top), PivotSeq{a.cols(), std::move(r.pivots)}});
}

StratumEnumerator::StratumEnumerator(Field field, PivotSeq s, const EnumerateOptions& opt)
    : field_(std::move(field)),
      cur_{Mat(field_, s.cols.size(), s.n), s},
      total_(stratum_size(s, field_.q())),  // also rejects an invalid s
      done_(false) {
    if (!opt.force && total_ > opt.cap)
        throw Error(Errc::EnumerationTooLarge, "stratum has " + total_.get_str() +
                                                   " matrices, above the cap of " +
                                                   opt.cap.get_str());
    const std::size_t n = s.n;
    const std::size_t d = s.cols.size();
    std::vector<bool> is_pivot(n + 1, false);
    for (std::size_t c : s.cols) is_pivot[c] = true;
    for (std::size_t i = 0; i < d; ++i) {
        cur_.mat.set(i, s.cols[i] - 1, 1);
        for (std::size_t c = s.cols[i] + 1; c <= n; ++c) {
            if (!is_pivot[c]) free_pos_.emplace_back(i, c - 1);
        }
    }
}

void StratumEnumerator::advance() {
    assert(!done_);
    const Fe q = field_.q();
    std::size_t k = free_pos_.size();
    while (k-- > 0) {
        const auto [r, c] = free_pos_[k];
        const Fe v = cur_.mat.at(r, c) + 1;
        if (v < q) {
            cur_.mat.set(r, c, v);
            return;
        }
        cur_.mat.set(r, c, 0);
    }
    done_ = true;
}

GrassmannianEnumerator::GrassmannianEnumerator(Field field, std::size_t n, std::size_t d,
                                               const EnumerateOptions& opt)
    : field_(std::move(field)), seqs_(n, d) {
    if (!opt.force) {
        // the guard wants only the total, which the product formula gives in
        // O(d) big-integer operations; emission still goes stratum by stratum
        const BigCount total = count_gaussian(field_.q(), n, d);
        if (total > opt.cap)
            throw Error(Errc::EnumerationTooLarge,
                        "enumeration of " + total.get_str() + " subspaces exceeds the cap of " +
                            opt.cap.get_str() + "; raise the cap or force to proceed");
    }
    settle();
}

void GrassmannianEnumerator::settle() {
    if (seqs_.done()) {
        stratum_.reset();
        return;
    }
    EnumerateOptions forced;
    forced.force = true;  // already guarded against the whole Grassmannian
    stratum_.emplace(field_, seqs_.current(), forced);
}

void GrassmannianEnumerator::advance() {
    assert(stratum_.has_value());
    stratum_->advance();
    if (stratum_->done()) {
        seqs_.advance();
        settle();
    }
}

}  // namespace grassmann
