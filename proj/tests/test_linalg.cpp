#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qv/linalg.hpp"

using namespace qv;

namespace {

MatrixGF random_matrix(const FieldSpec& f, int rows, int cols, std::mt19937_64& rng) {
    MatrixGF m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<int>(rng() % f.q()));
    return m;
}

} // namespace

TEST_CASE("rref of a hand-picked matrix over F_2") {
    const FieldSpec& f = field(2);
    MatrixGF m(f, 3, 4, {1, 1, 0, 1,
                         0, 1, 1, 0,
                         1, 0, 1, 1});
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<int>{0, 1});
    MatrixGF expected(f, 3, 4, {1, 0, 1, 1,
                                0, 1, 1, 0,
                                0, 0, 0, 0});
    CHECK(r.matrix == expected);
}

TEST_CASE("rref of a hand-picked matrix over F_3") {
    const FieldSpec& f = field(3);
    MatrixGF m(f, 2, 3, {2, 1, 0,
                         1, 2, 1});
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    // scale [2 1 0] by 2, subtract from the second row, pivots land at 0 and 2
    CHECK(r.pivots == std::vector<int>{0, 2});
    MatrixGF expected(f, 2, 3, {1, 2, 0,
                                0, 0, 1});
    CHECK(r.matrix == expected);
}

TEST_CASE("rref is idempotent and rank-stable on random matrices") {
    std::mt19937_64 rng(42);
    for (int q : {2, 3, 4, 5, 9}) {
        const FieldSpec& f = field(q);
        for (int trial = 0; trial < 25; ++trial) {
            MatrixGF m = random_matrix(f, 4, 6, rng);
            RrefResult r1 = rref(m);
            RrefResult r2 = rref(r1.matrix);
            CHECK(r1.matrix == r2.matrix);
            CHECK(r1.rank == r2.rank);
            CHECK(r1.rank == rank(m));
            CHECK(static_cast<int>(r1.pivots.size()) == r1.rank);
            for (size_t i = 1; i < r1.pivots.size(); ++i)
                CHECK(r1.pivots[i - 1] < r1.pivots[i]);
            // pivot columns are unit vectors in the reduced matrix
            for (int i = 0; i < r1.rank; ++i)
                for (int row = 0; row < 4; ++row)
                    CHECK(r1.matrix.at(row, r1.pivots[i]) == (row == i ? 1 : 0));
        }
    }
}

TEST_CASE("row space membership") {
    const FieldSpec& f = field(2);
    MatrixGF m(f, 2, 3, {1, 0, 1,
                         0, 1, 1});
    CHECK(row_space_contains(m, std::vector<uint8_t>{1, 1, 0}));
    CHECK(row_space_contains(m, std::vector<uint8_t>{0, 0, 0}));
    CHECK(!row_space_contains(m, std::vector<uint8_t>{1, 1, 1}));
    CHECK_THROWS_AS(row_space_contains(m, std::vector<uint8_t>{1, 1}),
                    DimensionMismatch);
}

TEST_CASE("every row of a matrix lies in its own row space") {
    std::mt19937_64 rng(7);
    const FieldSpec& f = field(4);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixGF m = random_matrix(f, 3, 5, rng);
        for (int r = 0; r < 3; ++r) CHECK(row_space_contains(m, m.row(r)));
    }
}

TEST_CASE("rank bounds") {
    std::mt19937_64 rng(11);
    const FieldSpec& f = field(3);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixGF m = random_matrix(f, 5, 3, rng);
        int r = rank(m);
        CHECK(r >= 0);
        CHECK(r <= 3);
    }
    CHECK(rank(MatrixGF(f, 4, 4)) == 0);
}
