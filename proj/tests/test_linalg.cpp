#include "doctest.h"
#include "mqt/linalg.hpp"

#include "test_helpers.hpp"

using namespace mqt;
using namespace mqt::testing;

TEST_CASE("linalg: rref examples") {
    const Field f2 = Field::parse("2");
    // Hand elimination: subtract row 2 from row 1.
    MatrixF m(f2, 2, 2, {1, 1, 0, 1});
    const auto r = rref(m);
    CHECK(r.matrix == MatrixF::identity(f2, 2));
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});

    // Scale by inv(2) = 2 over GF(3).
    const Field f3 = Field::parse("3");
    const auto r2 = rref(MatrixF(f3, 1, 2, {2, 1}));
    CHECK(r2.matrix == MatrixF(f3, 1, 2, {1, 2}));
    CHECK(r2.pivot_columns == std::vector<std::size_t>{0});

    const auto r3 = rref(MatrixF(f2, 2, 3));
    CHECK(r3.matrix == MatrixF(f2, 2, 3));
    CHECK(r3.pivot_columns.empty());
}

TEST_CASE("linalg: rank examples") {
    const Field f2 = Field::parse("2");
    CHECK(rank(MatrixF::identity(f2, 2)) == 2);
    CHECK(rank(MatrixF(f2, 2, 2, {1, 1, 1, 1})) == 1);
    CHECK(rank(MatrixF(f2, 3, 3)) == 0);
}

TEST_CASE("linalg: rref is idempotent and basis independent") {
    std::mt19937_64 rng(20240811);
    for (const char* spec : {"2", "3", "2^2"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 100; ++i) {
            const std::size_t rows = 1 + rng() % 4;
            const std::size_t cols = 1 + rng() % 5;
            const MatrixF m = random_matrix(f, rows, cols, rng);
            const auto r = rref(m);
            CHECK(rref(r.matrix).matrix == r.matrix);
            const MatrixF p = random_invertible(f, rows, rng);
            CHECK(rref(mat_mul(p, m)).matrix == r.matrix);
        }
    }
}

TEST_CASE("linalg: right kernel examples") {
    const Field f2 = Field::parse("2");
    const MatrixF m(f2, 2, 4, {1, 0, 0, 0, 0, 0, 0, 1});
    const MatrixF k = right_kernel(m);
    CHECK(k == MatrixF(f2, 2, 4, {0, 1, 0, 0, 0, 0, 1, 0}));

    CHECK(right_kernel(MatrixF::identity(f2, 2)).rows() == 0);
    CHECK(right_kernel(MatrixF(f2, 1, 3)) == MatrixF::identity(f2, 3));
}

TEST_CASE("linalg: rank-nullity and kernel membership") {
    std::mt19937_64 rng(7);
    for (const char* spec : {"2", "3"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 100; ++i) {
            const std::size_t rows = 1 + rng() % 4;
            const std::size_t cols = 1 + rng() % 5;
            const MatrixF m = random_matrix(f, rows, cols, rng);
            const MatrixF k = right_kernel(m);
            CHECK(rank(m) + k.rows() == cols);
            for (std::size_t r = 0; r < k.rows(); ++r) {
                CHECK(mat_vec(m, k.row(r)).is_zero());
            }
        }
    }
}

TEST_CASE("linalg: solve examples") {
    const Field f2 = Field::parse("2");
    const auto x1 = solve(MatrixF::identity(f2, 2), make_vector(f2, {1, 0}));
    REQUIRE(x1.has_value());
    CHECK(*x1 == make_vector(f2, {1, 0}));

    // Free variable pinned to zero.
    const auto x2 = solve(MatrixF(f2, 1, 2, {1, 1}), make_vector(f2, {1}));
    REQUIRE(x2.has_value());
    CHECK(*x2 == make_vector(f2, {1, 0}));

    CHECK(!solve(MatrixF(f2, 1, 2), make_vector(f2, {1})).has_value());
    CHECK_THROWS_AS(solve(MatrixF(f2, 2, 2), make_vector(f2, {1})), DomainError);
}

TEST_CASE("linalg: solve returns exact solutions on consistent systems") {
    std::mt19937_64 rng(99);
    for (const char* spec : {"2", "3", "2^2"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 100; ++i) {
            const std::size_t rows = 1 + rng() % 4;
            const std::size_t cols = 1 + rng() % 4;
            const MatrixF m = random_matrix(f, rows, cols, rng);
            const MatrixF xt = random_matrix(f, cols, 1, rng);
            const MatrixF b = mat_mul(m, xt);
            VectorF bv(f, rows);
            for (std::size_t t = 0; t < rows; ++t) bv.set_raw(t, b.raw(t, 0));
            const auto x = solve(m, bv);
            REQUIRE(x.has_value());
            CHECK(mat_vec(m, *x) == bv);
        }
    }
}

TEST_CASE("linalg: kron examples") {
    const Field f2 = Field::parse("2");
    CHECK(kron(make_vector(f2, {1, 0}), make_vector(f2, {0, 1})) ==
          make_vector(f2, {0, 1, 0, 0}));
    CHECK(kron(MatrixF::identity(f2, 2), MatrixF::identity(f2, 2)) == MatrixF::identity(f2, 4));

    const Field f3 = Field::parse("3");
    CHECK(kron(make_vector(f3, {1, 2}), make_vector(f3, {1, 1})) ==
          make_vector(f3, {1, 1, 2, 2}));
}

TEST_CASE("linalg: kron multiplies ranks") {
    std::mt19937_64 rng(4242);
    for (const char* spec : {"2", "3"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 60; ++i) {
            const MatrixF a = random_matrix(f, 1 + rng() % 3, 1 + rng() % 3, rng);
            const MatrixF b = random_matrix(f, 1 + rng() % 3, 1 + rng() % 3, rng);
            CHECK(rank(kron(a, b)) == rank(a) * rank(b));
        }
    }
}

TEST_CASE("linalg: inverse") {
    const Field f3 = Field::parse("3");
    const MatrixF m(f3, 2, 2, {1, 0, 0, 2});
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(m, *inv) == MatrixF::identity(f3, 2));
    CHECK(!inverse(MatrixF(f3, 2, 2, {1, 1, 2, 2})).has_value());

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const MatrixF p = random_invertible(f3, 3, rng);
        const auto pi = inverse(p);
        REQUIRE(pi.has_value());
        CHECK(mat_mul(p, *pi) == MatrixF::identity(f3, 3));
    }
}
