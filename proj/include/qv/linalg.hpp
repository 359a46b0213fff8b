#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qv/gf.hpp"

namespace qv {

/// Dense row-major matrix over F_q. Value type; all operations are pure.
class MatrixGF {
public:
    MatrixGF(const FieldSpec& f, int rows, int cols)
        : f_(&f), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols, 0) {}

    MatrixGF(const FieldSpec& f, int rows, int cols, std::vector<uint8_t> entries);

    const FieldSpec& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint8_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { a_[static_cast<size_t>(r) * cols_ + c] = static_cast<uint8_t>(v); }

    std::span<const uint8_t> row(int r) const {
        return {a_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
    }
    const std::vector<uint8_t>& entries() const { return a_; }

    bool operator==(const MatrixGF& o) const {
        return f_->q() == o.f_->q() && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    const FieldSpec* f_;
    int rows_, cols_;
    std::vector<uint8_t> a_;
};

struct RrefResult {
    MatrixGF matrix;
    int rank;
    std::vector<int> pivots; // strictly increasing pivot column indices
};

/// Unique reduced row echelon form. Zero rows sink to the bottom.
RrefResult rref(const MatrixGF& m);

/// Rank only (no reduced matrix materialized beyond the scratch copy).
int rank(const MatrixGF& m);

/// True iff v lies in the row space of m, decided by rank comparison
/// after appending v. Throws DimensionMismatch when v has the wrong length.
bool row_space_contains(const MatrixGF& m, std::span<const uint8_t> v);

} // namespace qv
