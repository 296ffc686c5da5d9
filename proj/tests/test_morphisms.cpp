#include <gtest/gtest.h>

#include "support.hpp"

using namespace leibniz;
using testing_support::random_params;

namespace {

Matrix diag(std::vector<long> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return multiply(a, b) - multiply(b, a); }

} // namespace

TEST(Homomorphism, SpecExamples) {
    const Algebra a = build(FamilyId::R0, 3);
    EXPECT_TRUE(is_homomorphism(a, LinearMap::zero(4)).holds);
    EXPECT_TRUE(is_homomorphism(a, aut_matrix(FamilyId::R0, 3, AutParams(FamilyId::R0, {1, 1}))).holds);

    const auto bad = is_homomorphism(a, LinearMap(diag({1, 2, 1, 1})));
    EXPECT_FALSE(bad.holds);
    ASSERT_TRUE(bad.counterexample.has_value());
    EXPECT_EQ(*bad.counterexample, (std::pair<std::size_t, std::size_t>{1, 1}));
    const LinearMap m(diag({1, 2, 1, 1}));
    const Vector e1 = basis_vector(4, 1);
    EXPECT_EQ(m(a.product(1, 1)), basis_vector(4, 2));
    EXPECT_EQ(bracket(a, m(e1), m(e1)), basis_vector(4, 2, 4));
    EXPECT_FALSE(bad.smoke_ok);
}

TEST(Homomorphism, RejectsWrongShape) {
    EXPECT_THROW(is_homomorphism(build(FamilyId::R0, 3), LinearMap::identity(3)), ShapeError);
}

TEST(Automorphism, SpecExamples) {
    std::mt19937_64 rng(30);
    const Algebra r25 = build(FamilyId::R2, 5);
    EXPECT_TRUE(is_automorphism(r25, LinearMap::identity(7)));
    for (int t = 0; t < 10; ++t)
        EXPECT_TRUE(is_automorphism(r25, aut_matrix(FamilyId::R2, 5, random_params(FamilyId::R2, rng))));
    EXPECT_TRUE(is_homomorphism(r25, LinearMap::zero(7)).holds);
    EXPECT_FALSE(is_automorphism(r25, LinearMap::zero(7)));
}

TEST(Automorphism, OffFamilyPerturbationFails) {
    // Changing one generated entry breaks the homomorphism equations.
    for (auto f : all_families) {
        const std::size_t n = min_n(f) + 1;
        Matrix m = aut_matrix(f, n, identity_params(f)).matrix();
        m(m.rows() - 1, m.cols() - 1) += 1;
        EXPECT_FALSE(is_automorphism(build(f, n), LinearMap(m))) << to_string(f);
    }
}

TEST(DerivationSpace, SpecExamples) {
    EXPECT_EQ(derivation_space(abelian_algebra(3)).dimension(), 9u);
    EXPECT_EQ(derivation_space(build(FamilyId::R0, 3)).dimension(), 2u);
    EXPECT_EQ(derivation_space(build(FamilyId::R2, 4)).dimension(), 4u);
    EXPECT_EQ(derivation_space(build(FamilyId::R1, 5)).dimension(), 3u);
    EXPECT_EQ(derivation_space(build(FamilyId::R3, 5)).dimension(), 3u);
}

TEST(DerivationSpace, BasisElementsAreDerivationsClosedUnderCommutator) {
    for (auto f : all_families) {
        const Algebra a = build(f, min_n(f) + 1);
        const auto der = derivation_space(a);
        for (const auto& d : der.elements) EXPECT_TRUE(is_derivation(a, d));
        for (const auto& d1 : der.elements)
            for (const auto& d2 : der.elements) EXPECT_TRUE(is_derivation(a, commutator(d1, d2))) << to_string(f);
    }
}

TEST(DerivationSpace, RightMultiplicationsAreDerivations) {
    for (auto f : all_families) {
        const Algebra a = build(f, min_n(f) + 2);
        for (std::size_t i = 0; i < a.dim(); ++i)
            EXPECT_TRUE(is_derivation(a, right_multiplication(a, basis_vector(a.dim(), i))));
    }
}

TEST(ExpDerivation, SpecExamples) {
    const Algebra a = build(FamilyId::R0, 3);
    EXPECT_EQ(exp_derivation(a, Matrix(4, 4)), LinearMap::identity(4));

    // R_{e1}: e_i -> [e_i, e_1] = e_{i+1} for i >= 0 is a nilpotent derivation.
    const Matrix shift = right_multiplication(a, basis_vector(4, 1));
    ASSERT_TRUE(nilpotency_degree(shift).has_value());
    const LinearMap phi = exp_derivation(a, shift);
    const AutParams p = recover_params(FamilyId::R0, 3, phi);
    EXPECT_EQ(p.beta(), 1);
    EXPECT_EQ(p.alpha(), 1);

    // R_{e0} is diagonal with entries 0, 1, 2, 3: a derivation, not nilpotent.
    const Matrix d = right_multiplication(a, basis_vector(4, 0));
    EXPECT_TRUE(is_derivation(a, d));
    EXPECT_THROW(exp_derivation(a, d), NotNilpotentError);
    EXPECT_THROW(exp_derivation(a, diag({1, 2, 1, 1})), NotDerivationError);
}

TEST(ExpDerivation, NilpotentBasisElementsLandInTheFamily) {
    for (auto f : all_families) {
        const std::size_t n = min_n(f) + 2;
        const Algebra a = build(f, n);
        for (const auto& d : derivation_space(a).elements) {
            if (!nilpotency_degree(d)) continue;
            const LinearMap phi = exp_derivation(a, d);
            EXPECT_TRUE(is_automorphism(a, phi));
            EXPECT_NO_THROW(recover_params(f, n, phi)) << to_string(f);
        }
    }
}

TEST(NilpotencyDegree, Basics) {
    EXPECT_EQ(nilpotency_degree(Matrix(0, 0)), 0u);
    EXPECT_EQ(nilpotency_degree(Matrix(3, 3)), 1u);
    EXPECT_EQ(nilpotency_degree(Matrix{{0, 1}, {0, 0}}), 2u);
    EXPECT_FALSE(nilpotency_degree(Matrix::identity(2)).has_value());
}
