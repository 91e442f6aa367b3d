#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grassmann/field.hpp"

namespace grassmann {

/// Dense row-major matrix over a finite field. Dimensions may be zero; a
/// 0 x n matrix is the canonical representative of the zero subspace.
class Mat {
public:
    Mat(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Fe> entries);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Fe at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Fe v) { entries_[r * cols_ + c] = v; }

    /// Row-major entry codes, length rows * cols.
    const std::vector<Fe>& entries() const noexcept { return entries_; }

    bool operator==(const Mat& other) const;
    bool operator!=(const Mat& other) const { return !(*this == other); }

    Mat operator*(const Mat& other) const;  // throws DimensionMismatch, FieldMismatch

    void swap_rows(std::size_t a, std::size_t b);
    void scale_row(std::size_t r, Fe c);
    /// row a += c * row b
    void add_scaled_row(std::size_t a, std::size_t b, Fe c);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Fe> entries_;
};

/// Identity d x d matrix.
Mat identity(const Field& field, std::size_t d);

struct RrefResult {
    Mat rref;
    std::size_t rank;
    std::vector<std::size_t> pivots;  // 1-based pivot columns, strictly increasing
};

/// Gauss-Jordan reduction to the unique row-reduced echelon form: nonzero
/// rows first, each with leading entry 1, leading entries in strictly
/// increasing columns, and each pivot column zero elsewhere.
RrefResult rref(const Mat& m);

/// Checks the echelon conditions directly, without reducing.
bool is_rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Coordinates of v (a 1 x n row) in the row space of r, which must be an
/// RREF of rank rows. Reads the pivot-column entries of v, reconstructs the
/// combination, and compares. nullopt when v is outside the row space.
std::optional<std::vector<Fe>> coordinates(const RrefResult& r, const std::vector<Fe>& v);

bool row_space_contains(const RrefResult& r, const std::vector<Fe>& v);

}  // namespace grassmann
