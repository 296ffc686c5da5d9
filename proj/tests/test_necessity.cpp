#include <gtest/gtest.h>

#include "support.hpp"

using namespace leibniz;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

bool has_solved(const std::vector<Constraint>& cs, const std::string& var, const Poly& value) {
    for (const auto& c : cs)
        if (c.kind == Constraint::Kind::Solved && c.var == var && c.value == value) return true;
    return false;
}

bool has_residual(const std::vector<Constraint>& cs, const Poly& eq) {
    for (const auto& c : cs)
        if (c.kind == Constraint::Kind::Residual && c.value == eq) return true;
    return false;
}

std::string a(std::size_t j, std::size_t i) { return "a_{" + std::to_string(j) + "," + std::to_string(i) + "}"; }

// Last step imposing (l, r); (e2, y) occurs twice in the R1 script.
const CertificateStep& step(const Certificate& c, const std::string& l, const std::string& r) {
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it)
        if (it->left == l && it->right == r) return *it;
    throw std::runtime_error("no step (" + l + "," + r + ")");
}

} // namespace

TEST(ImposePair, R0FirstStepGivesTheRecurrence) {
    const std::size_t n = 5;
    SymbolicMap map = replay_script(FamilyId::R0, n).initial_map();
    const auto cs = map.impose(basis_vector(n + 1, 0), basis_vector(n + 1, 0));
    for (std::size_t i = 2; i <= n; ++i) {
        const Poly rec = Poly::variable(a(0, 0)) * Poly::variable(a(i, 0)) -
                         Poly::variable(a(1, 0)) * Poly::variable(a(i - 1, 0)) * make_scalar(1, static_cast<long>(i));
        EXPECT_TRUE(has_residual(cs, rec)) << rec.to_string();
    }
    EXPECT_EQ(cs.size(), n - 1);
}

TEST(ImposePair, R0SecondStepGivesTheDiagonal) {
    SymbolicMap map = replay_script(FamilyId::R0, 3).initial_map();
    map.impose(basis_vector(4, 0), basis_vector(4, 0));
    map.assume_nonzero(a(1, 1));
    const auto cs = map.impose(basis_vector(4, 0), basis_vector(4, 1));
    EXPECT_TRUE(has_solved(cs, a(0, 1), Poly(0)));
    EXPECT_TRUE(has_solved(cs, a(0, 0), Poly(1)));
    ASSERT_EQ(map.side_conditions().size(), 1u);
    EXPECT_EQ(map.side_conditions()[0].witness, "e2");
}

TEST(ImposePair, DivisionNeedsADeclaredNonzero) {
    SymbolicMap map = replay_script(FamilyId::R0, 3).initial_map();
    map.impose(basis_vector(4, 0), basis_vector(4, 0));
    const auto cs = map.impose(basis_vector(4, 0), basis_vector(4, 1));
    EXPECT_FALSE(has_solved(cs, a(0, 0), Poly(1)));
    EXPECT_TRUE(has_residual(cs, P("a_{0,0}*a_{1,1} - a_{1,1}")));
}

TEST(ImposePair, ZeroVectorsChangeNothing) {
    for (auto f : all_families) {
        const Algebra alg = build(f, min_n(f));
        SymbolicMap map = SymbolicMap::general(alg);
        const auto before = map.images();
        EXPECT_TRUE(map.impose(Vector(alg.dim()), Vector(alg.dim())).empty());
        EXPECT_EQ(map.images(), before);
        EXPECT_TRUE(map.solved().empty());
        EXPECT_TRUE(map.residuals().empty());
    }
}

TEST(ImposePair, UnwitnessedNonzeroClaimIsNotUsed) {
    // Setting a_{0,0} = 0 kills no image column, so it cannot justify a division.
    SymbolicMap map = replay_script(FamilyId::R0, 3).initial_map();
    map.assume_nonzero(a(0, 0));
    const auto cs = map.impose(basis_vector(4, 0), basis_vector(4, 0));
    for (const auto& c : cs) EXPECT_EQ(c.kind, Constraint::Kind::Residual);
    EXPECT_FALSE(map.side_conditions()[0].witness.has_value());
}

TEST(Close, IncompleteScriptLeavesResiduals) {
    SymbolicMap map = replay_script(FamilyId::R0, 3).initial_map();
    map.impose(basis_vector(4, 0), basis_vector(4, 0));
    EXPECT_THROW(map.close(), ResidualError);
}

TEST(Replay, R0ThreeMatchesClosedForm) {
    const Certificate c = replay(FamilyId::R0, 3);
    EXPECT_TRUE(c.match);
    EXPECT_TRUE(c.all_pairs_hold);
    ASSERT_GE(c.steps.size(), 2u);
    EXPECT_TRUE(has_solved(c.steps[1].constraints, a(0, 1), Poly(0)));
    EXPECT_TRUE(has_solved(c.steps[1].constraints, a(0, 0), Poly(1)));
    // Coefficient of e_j in phi(e_i) is alpha^{j-i} beta^i / (j-i)!.
    for (std::size_t i = 0; i <= 3; ++i)
        for (std::size_t j = 0; j <= 3; ++j) {
            Poly expected;
            if (j >= i)
                expected = Poly::variable("alpha").pow(j - i) * Poly::variable("beta").pow(i) *
                           Scalar(1 / Scalar(factorial(j - i)));
            EXPECT_EQ(c.final_images[i][j], expected) << i << "," << j;
        }
    EXPECT_EQ(c.parameters, (std::vector<std::pair<std::string, std::string>>{{"alpha", a(1, 0)}, {"beta", a(1, 1)}}));
}

TEST(Replay, R0OneDegenerates) {
    const Certificate c = replay(FamilyId::R0, 1);
    EXPECT_TRUE(c.match);
    EXPECT_EQ(c.final_images[0], (PolyVector{Poly(1), P("alpha")}));
    EXPECT_EQ(c.final_images[1], (PolyVector{Poly(0), P("beta")}));
}

TEST(Replay, R1TableConstraintsAreAttributedToTheirPairs) {
    for (std::size_t n = 4; n <= 7; ++n) {
        const Certificate c = replay(FamilyId::R1, n);
        EXPECT_TRUE(c.match);
        const auto& yx = step(c, "y", "x").constraints;
        EXPECT_TRUE(has_solved(yx, a(1, n + 2), Poly(0)));
        EXPECT_TRUE(has_solved(step(c, "e2", "y").constraints, a(n + 2, n + 2), Poly(1)));
        EXPECT_TRUE(has_solved(step(c, "y", "y").constraints, a(n, n + 2), Poly(0)));
        EXPECT_TRUE(has_solved(step(c, "e1", "y").constraints, a(n, 1), Poly(0)));
        EXPECT_TRUE(has_solved(step(c, "x", "y").constraints, a(n - 1, n + 1), Poly(0)));
        EXPECT_TRUE(has_solved(step(c, "x", "y").constraints, a(n, n + 1), Poly(0)));
        EXPECT_TRUE(has_solved(step(c, "e2", "x").constraints, a(n + 2, n + 1), Poly(0)));
    }
}

TEST(Replay, R1DivisionsAreJustified) {
    const Certificate c = replay(FamilyId::R1, 6);
    ASSERT_EQ(c.side_conditions.size(), 2u);
    EXPECT_EQ(c.side_conditions[0].var, a(1, 1));
    EXPECT_EQ(c.side_conditions[1].var, a(2, 2));
    for (const auto& s : c.side_conditions) EXPECT_TRUE(s.witness.has_value());
    for (const Constraint* k : c.all_constraints())
        for (const auto& d : k->divided_by) EXPECT_TRUE(d == a(1, 1) || d == a(2, 2));
}

TEST(Replay, UnsupportedFamiliesAndSizes) {
    EXPECT_THROW(replay(FamilyId::R2, 4), UnsupportedError);
    EXPECT_THROW(replay(FamilyId::R3, 5), UnsupportedError);
    EXPECT_THROW(replay(FamilyId::R1, 3), DimensionError);
    EXPECT_THROW(replay(FamilyId::R0, 0), DimensionError);
}

TEST(Replay, IsDeterministic) {
    for (auto f : {FamilyId::R0, FamilyId::R1}) {
        const std::size_t n = min_n(f) + 2;
        EXPECT_EQ(certificate_to_json(replay(f, n)).dump(), certificate_to_json(replay(f, n)).dump());
    }
}

TEST(Replay, AgreesWithAutMatrixPointwise) {
    std::mt19937_64 rng(50);
    for (auto f : {FamilyId::R0, FamilyId::R1}) {
        const std::size_t n = min_n(f) + 1;
        const Certificate c = replay(f, n);
        for (int t = 0; t < 20; ++t) {
            const AutParams p = testing_support::random_params(f, rng);
            std::map<std::string, Scalar> at;
            for (std::size_t k = 0; k < p.size(); ++k) at[parameter_names(f)[k]] = p[k];
            const LinearMap m = aut_matrix(f, n, p);
            for (std::size_t i = 0; i < c.final_images.size(); ++i)
                for (std::size_t j = 0; j < c.final_images[i].size(); ++j)
                    EXPECT_EQ(poly_eval(c.final_images[i][j], at), m.matrix()(j, i));
        }
    }
}

TEST(SymbolicAut, MatchesAutMatrixForEveryFamily) {
    std::mt19937_64 rng(51);
    for (auto f : all_families) {
        const std::size_t n = min_n(f) + 2;
        const auto sym = symbolic_aut(f, n);
        const AutParams p = testing_support::random_params(f, rng);
        std::map<std::string, Scalar> at;
        for (std::size_t k = 0; k < p.size(); ++k) at[parameter_names(f)[k]] = p[k];
        const LinearMap m = aut_matrix(f, n, p);
        for (std::size_t i = 0; i < sym.size(); ++i)
            for (std::size_t j = 0; j < sym.size(); ++j) EXPECT_EQ(poly_eval(sym[i][j], at), m.matrix()(j, i));
    }
}

TEST(CertificateAudit, AcceptsGenuineCertificates) {
    for (auto [f, n] : {std::pair{FamilyId::R0, 1}, {FamilyId::R0, 6}, {FamilyId::R1, 4}, {FamilyId::R1, 6}}) {
        const Certificate c = replay(f, static_cast<std::size_t>(n));
        const auto audit = replay_certificate(certificate_from_json(certificate_to_json(c)));
        EXPECT_TRUE(audit.ok()) << audit.detail;
    }
}

TEST(CertificateAudit, RejectsTamperedCertificates) {
    const Certificate good = replay(FamilyId::R0, 4);

    Certificate wrong_value = good;
    for (auto& k : wrong_value.steps[1].constraints)
        if (k.var == a(0, 0)) k.value = Poly(2);
    EXPECT_FALSE(replay_certificate(wrong_value).ok());

    Certificate wrong_image = good;
    wrong_image.final_images[2][3] += Poly(1);
    const auto audit = replay_certificate(wrong_image);
    EXPECT_FALSE(audit.reproduces);

    Certificate unjustified = good;
    unjustified.side_conditions.clear();
    EXPECT_FALSE(replay_certificate(unjustified).divisions_justified);
}
