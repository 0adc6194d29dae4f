#include "doctest.h"
#include "mqt/composite.hpp"

#include "test_helpers.hpp"

using namespace mqt;
using namespace mqt::testing;

namespace {
const FactorShape kTwoByTwo = FactorShape::bipartite(2, 2);
}

TEST_CASE("composite: tensor products of subspaces") {
    const Field f2 = Field::parse("2");
    const Subspace e0 = span_of(f2, 2, {{1, 0}});
    const Subspace e1 = span_of(f2, 2, {{0, 1}});
    CHECK(tensor_subspace(e0, e1) == span_of(f2, 4, {{0, 1, 0, 0}}));
    CHECK(tensor_subspace(e0, Subspace::null(f2, 2)) == Subspace::null(f2, 4));
    CHECK(tensor_subspace(Subspace::full(f2, 2), Subspace::full(f2, 2)) ==
          Subspace::full(f2, 4));

    // Dimensions multiply.
    const Field f3 = Field::parse("3");
    for (const Subspace& a : enumerate_subspaces(f3, 2)) {
        for (const Subspace& b : enumerate_subspaces(f3, 2)) {
            CHECK(tensor_subspace(a, b).dim() == a.dim() * b.dim());
        }
    }
}

TEST_CASE("composite: reduction of pure states") {
    const Field f2 = Field::parse("2");
    // The maximally entangled pair reduces to the full space on both sides.
    const VectorF bell = make_vector(f2, {1, 0, 0, 1});
    CHECK(reduce_pure(bell, kTwoByTwo, 1) == Subspace::full(f2, 2));
    CHECK(reduce_pure(bell, kTwoByTwo, 2) == Subspace::full(f2, 2));

    // Product states reduce to their factors.
    const VectorF prod = kron(make_vector(f2, {1, 0}), make_vector(f2, {0, 1}));
    CHECK(reduce_pure(prod, kTwoByTwo, 2) == span_of(f2, 2, {{0, 1}}));
    CHECK(reduce_pure(prod, kTwoByTwo, 1) == span_of(f2, 2, {{1, 0}}));

    // Grid diag(1, 2) has rank 2 over GF(3).
    const Field f3 = Field::parse("3");
    const VectorF weighted = make_vector(f3, {1, 0, 0, 2});
    CHECK(reduce_pure(weighted, kTwoByTwo, 2) == Subspace::full(f3, 2));

    CHECK_THROWS_AS(reduce_pure(VectorF(f2, 4), kTwoByTwo, 1), DomainError);
    CHECK_THROWS_AS(reduce_pure(make_vector(f2, {1, 0}), kTwoByTwo, 1), DomainError);
}

TEST_CASE("composite: reduction of mixed states") {
    const Field f2 = Field::parse("2");
    const Subspace bell_line = span_of(f2, 4, {{1, 0, 0, 1}});
    CHECK(reduce(bell_line, kTwoByTwo, 1) == Subspace::full(f2, 2));
    CHECK(reduce(bell_line, kTwoByTwo, 2) == Subspace::full(f2, 2));

    // reduce(A tensor B) recovers the factors for nonzero A, B.
    for (const Subspace& a : enumerate_subspaces(f2, 2)) {
        for (const Subspace& b : enumerate_subspaces(f2, 2)) {
            if (a.is_null() || b.is_null()) continue;
            const Subspace ab = tensor_subspace(a, b);
            CHECK(reduce(ab, kTwoByTwo, 1) == a);
            CHECK(reduce(ab, kTwoByTwo, 2) == b);
        }
    }

    CHECK(reduce(span_of(f2, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}}), kTwoByTwo, 1) ==
          Subspace::full(f2, 2));
    CHECK(reduce(Subspace::null(f2, 4), kTwoByTwo, 1) == Subspace::null(f2, 2));
}

TEST_CASE("composite: reduction is basis independent") {
    std::mt19937_64 rng(31337);
    for (const char* spec : {"2", "3"}) {
        const Field f = Field::parse(spec);
        for (const Subspace& m : enumerate_subspaces(f, 4)) {
            if (m.is_null()) continue;
            // Recombine the stored basis by a random invertible matrix.
            const MatrixF p = random_invertible(f, m.dim(), rng);
            const Subspace recombined = Subspace::span_rows(mat_mul(p, m.basis()));
            REQUIRE(recombined == m);
            for (std::size_t keep = 1; keep <= 2; ++keep) {
                CHECK(reduce(recombined, kTwoByTwo, keep) == reduce(m, kTwoByTwo, keep));
            }
        }
    }
}

TEST_CASE("composite: reduction respects mixtures, exhaustively") {
    const Field f2 = Field::parse("2");
    const auto all = enumerate_subspaces(f2, 4);
    for (std::size_t keep = 1; keep <= 2; ++keep) {
        for (const Subspace& a : all) {
            for (const Subspace& b : all) {
                CHECK(reduce(join(a, b), kTwoByTwo, keep) ==
                      join(reduce(a, kTwoByTwo, keep), reduce(b, kTwoByTwo, keep)));
            }
        }
    }
}

TEST_CASE("composite: reductions are minimal") {
    const Field f2 = Field::parse("2");
    for (const Subspace& m : enumerate_subspaces(f2, 4)) {
        if (m.is_null()) continue;
        const Subspace r1 = reduce(m, kTwoByTwo, 1);
        const Subspace r2 = reduce(m, kTwoByTwo, 2);
        CHECK(includes(tensor_subspace(r1, r2), m));
        // No strictly smaller factor works on either side.
        for_each_subspace_of(r1, std::nullopt, Budget{}, [&](const Subspace& smaller) {
            if (smaller == r1) return;
            CHECK(!includes(tensor_subspace(smaller, r2), m));
        });
        for_each_subspace_of(r2, std::nullopt, Budget{}, [&](const Subspace& smaller) {
            if (smaller == r2) return;
            CHECK(!includes(tensor_subspace(r1, smaller), m));
        });
    }
}

TEST_CASE("composite: pure reductions of product vectors are the factors") {
    std::mt19937_64 rng(2718);
    const Field f3 = Field::parse("3");
    const auto vectors = nonzero_vectors(f3, 2);
    for (const VectorF& u : vectors) {
        for (const VectorF& v : vectors) {
            const VectorF uv = kron(u, v);
            CHECK(reduce_pure(uv, kTwoByTwo, 1) == Subspace::span(f3, 2, {u}));
            CHECK(reduce_pure(uv, kTwoByTwo, 2) == Subspace::span(f3, 2, {v}));
        }
    }
}

TEST_CASE("composite: three factors reduce by grouping") {
    const Field f2 = Field::parse("2");
    const FactorShape shape{{2, 2, 2}};
    CHECK(shape.total() == 8);
    // e0 tensor e1 tensor e0 sits at composite index 2.
    VectorF v(f2, 8);
    v.set_raw(2, 1);
    const Subspace m = Subspace::span(f2, 8, {v});
    CHECK(reduce(m, shape, 1) == span_of(f2, 2, {{1, 0}}));
    CHECK(reduce(m, shape, 2) == span_of(f2, 2, {{0, 1}}));
    CHECK(reduce(m, shape, 3) == span_of(f2, 2, {{1, 0}}));

    CHECK_THROWS_AS(reduce(m, shape, 0), DomainError);
    CHECK_THROWS_AS(reduce(m, shape, 4), DomainError);
    CHECK_THROWS_AS(reduce(m, kTwoByTwo, 1), DomainError);  // shape mismatch
}
