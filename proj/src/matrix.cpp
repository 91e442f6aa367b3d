#include "grassmann/matrix.hpp"

#include <cassert>
#include <string>

namespace grassmann {

Mat::Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Fe> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw Error(Errc::DimensionMismatch,
                    "entry count " + std::to_string(entries_.size()) + " does not match " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
    for (Fe e : entries_) {
        if (e >= field_.q())
            throw Error(Errc::ValueOutOfRange, "entry code " + std::to_string(e) +
                                                   " outside field of order " +
                                                   std::to_string(field_.q()));
    }
}

bool Mat::operator==(const Mat& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

Mat Mat::operator*(const Mat& other) const {
    if (field_ != other.field_)
        throw Error(Errc::FieldMismatch, "matrix product across different fields");
    if (cols_ != other.rows_)
        throw Error(Errc::DimensionMismatch,
                    "inner dimensions " + std::to_string(cols_) + " and " +
                        std::to_string(other.rows_) + " differ");
    Mat out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Fe a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out.set(i, j, field_.add(out.at(i, j), field_.mul(a, other.at(k, j))));
            }
        }
    }
    return out;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
    assert(a < rows_ && b < rows_);
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
    }
}

void Mat::scale_row(std::size_t r, Fe c) {
    assert(r < rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        entries_[r * cols_ + j] = field_.mul(entries_[r * cols_ + j], c);
    }
}

void Mat::add_scaled_row(std::size_t a, std::size_t b, Fe c) {
    assert(a < rows_ && b < rows_);
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Fe t = field_.mul(c, entries_[b * cols_ + j]);
        entries_[a * cols_ + j] = field_.add(entries_[a * cols_ + j], t);
    }
}

Mat identity(const Field& field, std::size_t d) {
    Mat m(field, d, d);
    for (std::size_t i = 0; i < d; ++i) m.set(i, i, 1);
    return m;
}

RrefResult rref(const Mat& m) {
    Mat a = m;
    const Field& f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && a.at(pr, col) == 0) ++pr;
        if (pr == a.rows()) continue;
        a.swap_rows(row, pr);
        if (a.at(row, col) != 1) a.scale_row(row, f.inv(a.at(row, col)));
        for (std::size_t r = row + 1; r < a.rows(); ++r) {
            if (a.at(r, col) != 0) a.add_scaled_row(r, row, f.neg(a.at(r, col)));
        }
        pivots.push_back(col + 1);
        ++row;
    }
    // backward clearing above each pivot
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t col = pivots[i] - 1;
        for (std::size_t r = 0; r < i; ++r) {
            if (a.at(r, col) != 0) a.add_scaled_row(r, i, f.neg(a.at(r, col)));
        }
    }
    return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

bool is_rref(const Mat& m) {
    std::size_t prev_pivot = 0;  // 1-based, 0 = none yet
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t lead = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) != 0) {
                lead = j + 1;
                break;
            }
        }
        if (lead == 0) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (lead <= prev_pivot) return false;
        if (m.at(i, lead - 1) != 1) return false;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != i && m.at(r, lead - 1) != 0) return false;
        }
        prev_pivot = lead;
    }
    return true;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

std::optional<std::vector<Fe>> coordinates(const RrefResult& r, const std::vector<Fe>& v) {
    const Mat& a = r.rref;
    if (v.size() != a.cols())
        throw Error(Errc::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                 " does not match " + std::to_string(a.cols()) +
                                                 " columns");
    const Field& f = a.field();
    // candidate coordinates are the pivot-column entries of v
    std::vector<Fe> b(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) b[i] = v[r.pivots[i] - 1];
    // reconstruct and compare
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Fe acc = 0;
        for (std::size_t i = 0; i < r.rank; ++i) {
            if (b[i] != 0) acc = f.add(acc, f.mul(b[i], a.at(i, j)));
        }
        if (acc != v[j]) return std::nullopt;
    }
    return b;
}

bool row_space_contains(const RrefResult& r, const std::vector<Fe>& v) {
    return coordinates(r, v).has_value();
}

}  // namespace grassmann
