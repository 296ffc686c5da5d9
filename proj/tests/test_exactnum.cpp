#include <gtest/gtest.h>

#include "support.hpp"

using namespace leibniz;
using testing_support::random_matrix;
using testing_support::random_scalar;

TEST(Scalar, ParsesCanonicalForms) {
    EXPECT_EQ(parse_scalar("6/4"), make_scalar(3, 2));
    EXPECT_EQ(to_string(parse_scalar("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_scalar("8/4")), "2");
    EXPECT_EQ(parse_scalar("0"), Scalar(0));
    EXPECT_THROW(parse_scalar("1/0"), ParseError);
    EXPECT_THROW(parse_scalar("1.5"), ParseError);
    EXPECT_THROW(parse_scalar("1/-2"), ParseError);
    EXPECT_THROW(parse_scalar(""), ParseError);
    EXPECT_THROW(make_scalar(1, 0), ParseError);
}

TEST(Scalar, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        const Scalar s = a * b + c;
        EXPECT_EQ(s, parse_scalar(to_string(s)));
    }
}

TEST(Scalar, FactorialAndPower) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(6), 720);
    EXPECT_EQ(power(make_scalar(-2, 3), 3), make_scalar(-8, 27));
    EXPECT_EQ(power(make_scalar(5, 7), 0), Scalar(1));
}

TEST(Rref, SpecExamples) {
    auto r = rref(Matrix::identity(3));
    EXPECT_EQ(r.reduced, Matrix::identity(3));
    EXPECT_EQ(r.rank, 3u);
    EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1, 2}));

    r = rref(Matrix{{2, 4}, {1, 2}});
    EXPECT_EQ(r.reduced, (Matrix{{1, 2}, {0, 0}}));
    EXPECT_EQ(r.rank, 1u);
    EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0}));

    r = rref(Matrix(2, 3));
    EXPECT_EQ(r.reduced, Matrix(2, 3));
    EXPECT_EQ(r.rank, 0u);
    EXPECT_TRUE(r.pivot_columns.empty());
}

TEST(Nullspace, SpecExamples) {
    EXPECT_TRUE(nullspace(Matrix::identity(2)).empty());
    auto ns = nullspace(Matrix{{1, 2}});
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0], (Matrix{{-2}, {1}}));
    ns = nullspace(Matrix(2, 2));
    ASSERT_EQ(ns.size(), 2u);
    EXPECT_EQ(ns[0], (Matrix{{1}, {0}}));
    EXPECT_EQ(ns[1], (Matrix{{0}, {1}}));
}

TEST(Invert, SpecExamples) {
    EXPECT_EQ(invert(Matrix::identity(4)), Matrix::identity(4));
    EXPECT_EQ(invert(Matrix{{1, 1}, {0, 1}}), (Matrix{{1, -1}, {0, 1}}));
    EXPECT_THROW(invert(Matrix{{1, 2}, {2, 4}}), SingularError);
    EXPECT_THROW(invert(Matrix(2, 3)), ShapeError);
}

TEST(Multiply, SpecExamples) {
    const Matrix m{{1, 2, 3}, {4, 5, 6}};
    EXPECT_EQ(multiply(Matrix::identity(2), m), m);
    EXPECT_EQ(multiply(Matrix{{1, 1}, {0, 1}}, Matrix{{1, -1}, {0, 1}}), Matrix::identity(2));
    EXPECT_THROW(multiply(m, Matrix::identity(2)), ShapeError);
}

TEST(LinearAlgebra, RankNullityOnRandomMatrices) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        const Matrix m = random_matrix(rng, rows, cols, 0.5);
        const auto ns = nullspace(m);
        EXPECT_EQ(rank(m) + ns.size(), cols);
        for (const auto& v : ns) EXPECT_TRUE(multiply(m, v).is_zero());
    }
}

TEST(LinearAlgebra, RrefIsIdempotent) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const Matrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
        const auto once = rref(m);
        const auto twice = rref(once.reduced);
        EXPECT_EQ(once.reduced, twice.reduced);
        EXPECT_EQ(once.pivot_columns, twice.pivot_columns);
    }
}

TEST(LinearAlgebra, InverseOfRandomInvertibleMatrices) {
    std::mt19937_64 rng(4);
    int checked = 0;
    while (checked < 40) {
        const std::size_t n = 1 + rng() % 5;
        const Matrix m = random_matrix(rng, n, n, 0.8);
        if (rank(m) < n) {
            EXPECT_THROW(invert(m), SingularError);
            continue;
        }
        const Matrix inv = invert(m);
        EXPECT_EQ(multiply(m, inv), Matrix::identity(n));
        EXPECT_EQ(multiply(inv, m), Matrix::identity(n));
        ++checked;
    }
}
