#include "qv/linalg.hpp"

namespace qv {

MatrixGF::MatrixGF(const FieldSpec& f, int rows, int cols, std::vector<uint8_t> entries)
    : f_(&f), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionMismatch("entry count does not match rows*cols");
    for (uint8_t v : a_)
        if (!f.valid(v))
            throw Error("invalid element code " + std::to_string(v) +
                        " for F_" + std::to_string(f.q()));
}

namespace {

// In-place Gauss-Jordan elimination on a scratch copy. Returns pivots.
std::vector<int> eliminate(const FieldSpec& f, std::vector<uint8_t>& a, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i) * cols + c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<size_t>(sel) * cols + j],
                          a[static_cast<size_t>(r) * cols + j]);
        int s = f.inv(a[static_cast<size_t>(r) * cols + c]);
        if (s != 1)
            for (int j = c; j < cols; ++j) {
                auto& e = a[static_cast<size_t>(r) * cols + j];
                e = static_cast<uint8_t>(f.mul(e, s));
            }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            int m = a[static_cast<size_t>(i) * cols + c];
            if (m == 0) continue;
            for (int j = c; j < cols; ++j) {
                auto& e = a[static_cast<size_t>(i) * cols + j];
                e = static_cast<uint8_t>(
                    f.sub(e, f.mul(m, a[static_cast<size_t>(r) * cols + j])));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

RrefResult rref(const MatrixGF& m) {
    std::vector<uint8_t> a = m.entries();
    auto pivots = eliminate(m.field(), a, m.rows(), m.cols());
    return {MatrixGF(m.field(), m.rows(), m.cols(), std::move(a)),
            static_cast<int>(pivots.size()), std::move(pivots)};
}

int rank(const MatrixGF& m) {
    std::vector<uint8_t> a = m.entries();
    return static_cast<int>(eliminate(m.field(), a, m.rows(), m.cols()).size());
}

bool row_space_contains(const MatrixGF& m, std::span<const uint8_t> v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw DimensionMismatch("vector length does not match column count");
    std::vector<uint8_t> a = m.entries();
    a.insert(a.end(), v.begin(), v.end());
    int r0 = rank(m);
    int r1 = static_cast<int>(eliminate(m.field(), a, m.rows() + 1, m.cols()).size());
    return r1 == r0;
}

} // namespace qv
