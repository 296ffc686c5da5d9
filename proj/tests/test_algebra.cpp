#include <gtest/gtest.h>

#include "support.hpp"

using namespace leibniz;

namespace {

Vector e(std::size_t dim, std::size_t i, long c = 1) { return basis_vector(dim, i, c); }

Subspace coords(std::size_t dim, std::vector<std::size_t> idx) { return Subspace::coordinate(dim, idx); }

Algebra nilradical(FamilyId f, std::size_t n) {
    const Algebra a = build(f, n);
    std::vector<std::size_t> idx;
    const std::size_t first = f == FamilyId::R0 ? 1 : 0;
    for (std::size_t k = 0; k < n; ++k) idx.push_back(first + k);
    return subalgebra_restrict(a, coords(a.dim(), idx));
}

} // namespace

TEST(Bracket, R0Examples) {
    const Algebra a = build(FamilyId::R0, 3);
    EXPECT_EQ(bracket(a, e(4, 1), e(4, 1)), e(4, 2));
    EXPECT_EQ(bracket(a, e(4, 2), e(4, 0)), e(4, 2, -2));
    EXPECT_EQ(bracket(a, e(4, 0), e(4, 2)), Vector(4));
}

TEST(Bracket, IsBilinear) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 30; ++t) {
        const Algebra a = testing_support::random_algebra(rng, 4);
        Vector u(4), v(4), w(4);
        for (std::size_t i = 0; i < 4; ++i) {
            u[i] = testing_support::random_scalar(rng);
            v[i] = testing_support::random_scalar(rng);
            w[i] = testing_support::random_scalar(rng);
        }
        const Scalar k = testing_support::random_scalar(rng);
        Vector uk = u;
        axpy(uk, k - 1, u);  // k*u
        Vector uw = u;
        axpy(uw, 1, w);
        Vector expected = bracket(a, u, v);
        axpy(expected, 1, bracket(a, w, v));
        EXPECT_EQ(bracket(a, uw, v), expected);
        Vector scaled = bracket(a, u, v);
        for (auto& x : scaled) x *= k;
        EXPECT_EQ(bracket(a, uk, v), scaled);
    }
}

TEST(Algebra, RejectsBadInput) {
    EXPECT_THROW(Algebra(std::vector<std::string>{"a", "a"}), ShapeError);
    Algebra a(2);
    EXPECT_THROW(a.set_product(2, 0, Vector(2)), ShapeError);
    EXPECT_THROW(a.set_product(0, 0, Vector(3)), ShapeError);
    EXPECT_THROW(bracket(a, Vector(3), Vector(2)), ShapeError);
}

TEST(CheckLeibniz, SpecExamples) {
    EXPECT_TRUE(check_leibniz(build(FamilyId::R0, 4)).empty());
    EXPECT_TRUE(check_leibniz(abelian_algebra(5)).empty());

    Algebra one(1);
    one.set_product(0, 0, {1});
    const auto v = check_leibniz(one);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].i, 0u);
    EXPECT_EQ(v[0].j, 0u);
    EXPECT_EQ(v[0].k, 0u);
    EXPECT_EQ(v[0].discrepancy, Vector{-1});
}

TEST(CheckLeibniz, LieBracketOfSl2IsLeibniz) {
    // Lie algebras are Leibniz algebras: sl2 with [h,e]=2e, [h,f]=-2f, [e,f]=h.
    Algebra a(std::vector<std::string>{"h", "e", "f"});
    a.set_product(0, 1, {0, 2, 0});
    a.set_product(1, 0, {0, -2, 0});
    a.set_product(0, 2, {0, 0, -2});
    a.set_product(2, 0, {0, 0, 2});
    a.set_product(1, 2, {1, 0, 0});
    a.set_product(2, 1, {-1, 0, 0});
    EXPECT_TRUE(check_leibniz(a).empty());
    EXPECT_FALSE(is_solvable(a));
}

TEST(SubspaceProduct, SpecExamples) {
    const Algebra r02 = build(FamilyId::R0, 2);
    EXPECT_EQ(subspace_product(r02, Subspace::full(3), Subspace::full(3)), coords(3, {1, 2}));

    const Algebra r03 = build(FamilyId::R0, 3);
    EXPECT_TRUE(subspace_product(r03, Subspace::full(4), Subspace::zero(4)).is_zero());
    const Subspace n = coords(4, {1, 2, 3});
    EXPECT_EQ(subspace_product(r03, n, n), coords(4, {2, 3}));
}

TEST(Series, SpecExamples) {
    const Algebra r03 = build(FamilyId::R0, 3);
    EXPECT_EQ(dimensions(lower_central_series(nilradical(FamilyId::R0, 3))), (std::vector<std::size_t>{3, 2, 1, 0}));
    EXPECT_EQ(dimensions(lower_central_series(abelian_algebra(5))), (std::vector<std::size_t>{5, 0}));
    EXPECT_EQ(dimensions(lower_central_series(r03)), (std::vector<std::size_t>{4, 3, 3}));

    EXPECT_EQ(dimensions(derived_series(r03)), (std::vector<std::size_t>{4, 3, 2, 0}));
    EXPECT_EQ(solvability_index(r03), 4u);
    EXPECT_EQ(dimensions(derived_series(abelian_algebra(3))), (std::vector<std::size_t>{3, 0}));
    EXPECT_EQ(dimensions(derived_series(build(FamilyId::R1, 4))), (std::vector<std::size_t>{6, 4, 2, 0}));
    EXPECT_EQ(dimensions(lower_central_series(build(FamilyId::R1, 4))), (std::vector<std::size_t>{6, 4, 4}));
}

TEST(Series, NilradicalDimensionsOfR1toR3) {
    for (auto f : {FamilyId::R1, FamilyId::R2, FamilyId::R3}) {
        EXPECT_EQ(dimensions(lower_central_series(nilradical(f, 4))), (std::vector<std::size_t>{4, 2, 1, 0}));
        EXPECT_EQ(dimensions(lower_central_series(nilradical(f, 5))), (std::vector<std::size_t>{5, 3, 2, 1, 0}));
        EXPECT_EQ(dimensions(derived_series(build(f, 5))), (std::vector<std::size_t>{7, 5, 3, 0}));
    }
    EXPECT_EQ(dimensions(lower_central_series(nilradical(FamilyId::R0, 4))), (std::vector<std::size_t>{4, 3, 2, 1, 0}));
}

TEST(Series, TermsAreNestedOnRandomAlgebras) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        const Algebra a = testing_support::random_algebra(rng, 2 + t % 4, 0.25);
        for (const auto& series : {lower_central_series(a), derived_series(a)}) {
            ASSERT_FALSE(series.empty());
            EXPECT_EQ(series.front().rank(), a.dim());
            for (std::size_t k = 1; k < series.size(); ++k) EXPECT_TRUE(series[k].is_subspace_of(series[k - 1]));
        }
    }
}

TEST(Indices, SpecExamples) {
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(nilpotency_index(nilradical(FamilyId::R0, n)), n + 1);
    EXPECT_EQ(nilpotency_index(abelian_algebra(3)), 2u);
    const Algebra r03 = build(FamilyId::R0, 3);
    EXPECT_TRUE(is_solvable(r03));
    EXPECT_FALSE(is_nilpotent(r03));
    EXPECT_FALSE(nilpotency_index(r03).has_value());
}

TEST(Filiform, SpecExamples) {
    EXPECT_TRUE(is_null_filiform(nilradical(FamilyId::R0, 4)));
    EXPECT_FALSE(is_null_filiform(abelian_algebra(2)));
    EXPECT_FALSE(is_null_filiform(nilradical(FamilyId::R2, 5)));

    EXPECT_TRUE(is_filiform(nilradical(FamilyId::R1, 5)));
    EXPECT_FALSE(is_filiform(abelian_algebra(3)));
    EXPECT_FALSE(is_filiform(nilradical(FamilyId::R0, 4)));
    // A solvable non-nilpotent algebra is never filiform.
    EXPECT_FALSE(is_filiform(build(FamilyId::R1, 4)));
}

TEST(RightAnnihilator, SpecExamples) {
    const Algebra r14 = build(FamilyId::R1, 4);
    const Subspace ann = right_annihilator(r14);
    for (std::size_t k = 2; k <= 4; ++k) EXPECT_TRUE(ann.contains(e(6, FilBasis{4}.e(k))));
    EXPECT_EQ(right_annihilator(abelian_algebra(3)), Subspace::full(3));
    // e_2 right-annihilates R0(3) as well as e_3: nothing in the table has
    // e_2 as its right factor.
    EXPECT_EQ(right_annihilator(build(FamilyId::R0, 3)), coords(4, {2, 3}));
}

TEST(SubalgebraRestrict, SpecExamples) {
    const Algebra r03 = build(FamilyId::R0, 3);
    const Algebra n = subalgebra_restrict(r03, coords(4, {1, 2, 3}));
    EXPECT_EQ(n.dim(), 3u);
    EXPECT_EQ(n.labels(), (std::vector<std::string>{"e1", "e2", "e3"}));
    EXPECT_TRUE(is_null_filiform(n));

    EXPECT_EQ(subalgebra_restrict(r03, Subspace::zero(4)).dim(), 0u);
    EXPECT_NO_THROW(subalgebra_restrict(r03, coords(4, {0})));
    EXPECT_THROW(subalgebra_restrict(r03, coords(4, {1})), NotClosedError);
}
