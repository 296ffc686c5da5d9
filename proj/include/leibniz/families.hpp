#pragma once

// The solvable Leibniz algebras R0..R3 and their automorphism groups.
//
// R0 has basis e0..en (dim n+1):
//   [e_i, e_1] = e_{i+1}   0 <= i <= n-1
//   [e_i, e_0] = -i e_i    1 <= i <= n
//
// R1, R2, R3 have basis e1..en, x, y (dim n+2) and the filiform nilradical
// span(e1..en). Their tables are written out in build() below.
//
// Automorphisms are parametrised as follows (a_{j,i} = coefficient of b_j in
// phi(b_i)):
//   R0: (alpha, beta)               = (a_{1,0}, a_{1,1}),            beta != 0
//   R1: (alpha, beta, gamma)        = (a_{1,1}, a_{2,2}, a_{1,n+1}), alpha*beta != 0
//   R2: (alpha, beta, gamma, delta) = (a_{1,1}, a_{1,n+1}, a_{2,2}, a_{2,n+2}),
//                                                                    alpha*gamma != 0
//   R3: (alpha, beta, gamma)        = (a_{1,1}, a_{1,n+1}, a_{2,2}), alpha*gamma != 0

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/linear_map.hpp"

namespace leibniz {

enum class FamilyId { R0, R1, R2, R3 };

inline constexpr std::array<FamilyId, 4> all_families{FamilyId::R0, FamilyId::R1, FamilyId::R2, FamilyId::R3};

inline std::string to_string(FamilyId f) {
    switch (f) {
    case FamilyId::R0: return "R0";
    case FamilyId::R1: return "R1";
    case FamilyId::R2: return "R2";
    case FamilyId::R3: return "R3";
    }
    return "?";
}

inline FamilyId parse_family(std::string_view s) {
    for (auto f : all_families)
        if (to_string(f) == s) return f;
    throw ParseError("unknown family '" + std::string(s) + "' (expected R0, R1, R2 or R3)");
}

inline std::size_t min_n(FamilyId f) { return f == FamilyId::R0 ? 1 : 4; }

inline std::size_t family_dim(FamilyId f, std::size_t n) { return f == FamilyId::R0 ? n + 1 : n + 2; }

inline std::size_t parameter_count(FamilyId f) {
    switch (f) {
    case FamilyId::R0: return 2;
    case FamilyId::R2: return 4;
    default: return 3;
    }
}

inline const std::vector<std::string>& parameter_names(FamilyId f) {
    static const std::vector<std::string> two{"alpha", "beta"};
    static const std::vector<std::string> three{"alpha", "beta", "gamma"};
    static const std::vector<std::string> four{"alpha", "beta", "gamma", "delta"};
    switch (f) {
    case FamilyId::R0: return two;
    case FamilyId::R2: return four;
    default: return three;
    }
}

inline void check_n(FamilyId f, std::size_t n) {
    if (n < min_n(f))
        throw DimensionError(to_string(f) + " requires n >= " + std::to_string(min_n(f)) + ", got " +
                             std::to_string(n));
}

/// Basis position of e_k (1-based) in R1..R3, and of x, y.
struct FilBasis {
    std::size_t n;
    std::size_t e(std::size_t k) const { return k - 1; }
    std::size_t x() const { return n; }
    std::size_t y() const { return n + 1; }
};

/// Parameter tuple of one family. Values are stored in the family's fixed
/// order (see parameter_names); unused slots stay zero.
class AutParams {
public:
    AutParams(FamilyId f, std::vector<Scalar> values) : family_(f), values_(std::move(values)) {
        if (values_.size() != parameter_count(f))
            throw ParamError(to_string(f) + " takes " + std::to_string(parameter_count(f)) + " parameters");
    }

    FamilyId family() const { return family_; }
    const std::vector<Scalar>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Scalar& operator[](std::size_t i) const { return values_.at(i); }

    const Scalar& alpha() const { return values_.at(0); }
    const Scalar& beta() const { return values_.at(1); }
    const Scalar& gamma() const { return values_.at(2); }
    const Scalar& delta() const { return values_.at(3); }

    /// The nonvanishing condition of the family.
    bool is_valid() const {
        switch (family_) {
        case FamilyId::R0: return sgn(beta()) != 0;
        case FamilyId::R1: return sgn(alpha()) != 0 && sgn(beta()) != 0;
        case FamilyId::R2:
        case FamilyId::R3: return sgn(alpha()) != 0 && sgn(gamma()) != 0;
        }
        return false;
    }

    void validate() const {
        if (is_valid()) return;
        static const char* rule[] = {"beta != 0", "alpha*beta != 0", "alpha*gamma != 0", "alpha*gamma != 0"};
        throw ParamError(to_string(family_) + " parameters violate " + rule[static_cast<int>(family_)]);
    }

    friend bool operator==(const AutParams& a, const AutParams& b) {
        return a.family_ == b.family_ && a.values_ == b.values_;
    }

private:
    FamilyId family_;
    std::vector<Scalar> values_;
};

inline AutParams identity_params(FamilyId f) {
    switch (f) {
    case FamilyId::R0: return AutParams(f, {0, 1});
    case FamilyId::R1: return AutParams(f, {1, 1, 0});
    case FamilyId::R2: return AutParams(f, {1, 0, 1, 0});
    case FamilyId::R3: return AutParams(f, {1, 0, 1});
    }
    throw ParamError("unknown family");
}

inline Algebra build(FamilyId f, std::size_t n) {
    check_n(f, n);
    const std::size_t dim = family_dim(f, n);

    if (f == FamilyId::R0) {
        Algebra a(dim);
        for (std::size_t i = 0; i + 1 <= n; ++i) a.add_product(i, 1, i + 1, 1);
        for (std::size_t i = 1; i <= n; ++i) a.add_product(i, 0, i, -static_cast<long>(i));
        return a;
    }

    std::vector<std::string> labels;
    for (std::size_t k = 1; k <= n; ++k) labels.push_back("e" + std::to_string(k));
    labels.push_back("x");
    labels.push_back("y");
    Algebra a(labels);
    const FilBasis b{n};

    a.add_product(b.e(1), b.x(), b.e(1), 1);
    a.add_product(b.x(), b.e(1), b.e(1), -1);

    if (f == FamilyId::R1) {
        for (std::size_t i = 2; i <= n - 1; ++i) a.add_product(b.e(i), b.e(1), b.e(i + 1), 1);
        for (std::size_t i = 2; i <= n; ++i) {
            a.add_product(b.e(i), b.x(), b.e(i), static_cast<long>(i - 1));
            a.add_product(b.e(i), b.y(), b.e(i), 1);
        }
        return a;
    }

    // R2 and R3 share everything except [y, e2].
    a.add_product(b.e(1), b.e(1), b.e(3), 1);
    for (std::size_t i = 3; i <= n - 1; ++i) a.add_product(b.e(i), b.e(1), b.e(i + 1), 1);
    for (std::size_t i = 3; i <= n; ++i) a.add_product(b.e(i), b.x(), b.e(i), static_cast<long>(i - 1));
    a.add_product(b.e(2), b.y(), b.e(2), 1);
    if (f == FamilyId::R2) a.add_product(b.y(), b.e(2), b.e(2), -1);
    return a;
}

namespace detail {

inline Scalar signed_term(unsigned long sign_exp, const Scalar& coeff, unsigned long fact) {
    Scalar out = coeff / Scalar(factorial(fact));
    return sign_exp % 2 ? Scalar(-out) : out;
}

} // namespace detail

inline LinearMap aut_matrix(FamilyId f, std::size_t n, const AutParams& p) {
    check_n(f, n);
    if (p.family() != f) throw ParamError("parameters belong to " + to_string(p.family()));
    p.validate();
    Matrix m(family_dim(f, n), family_dim(f, n));

    if (f == FamilyId::R0) {
        // phi(e_i) = sum_{j>=i} alpha^{j-i} beta^i / (j-i)! e_j
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                m(j, i) = power(p.alpha(), j - i) * power(p.beta(), i) / Scalar(factorial(j - i));
        return LinearMap(std::move(m));
    }

    const FilBasis b{n};
    if (f == FamilyId::R1) {
        const Scalar &alpha = p.alpha(), &beta = p.beta(), &gamma = p.gamma();
        m(b.e(1), b.e(1)) = alpha;
        for (std::size_t i = 2; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                m(b.e(j), b.e(i)) =
                    detail::signed_term(j - i, power(alpha, i - 2) * beta * power(gamma, j - i), j - i);
        m(b.e(1), b.x()) = gamma;
        m(b.x(), b.x()) = 1;
        m(b.y(), b.y()) = 1;
        return LinearMap(std::move(m));
    }

    // R2 / R3. The sign in phi(e_1) and phi(x) is (-1)^i (index parity), the
    // one in phi(e_i) is (-1)^{j-i}; both are kept exactly as stated.
    const Scalar &alpha = p.alpha(), &beta = p.beta(), &gamma = p.gamma();
    m(b.e(1), b.e(1)) = alpha;
    for (std::size_t i = 3; i <= n; ++i)
        m(b.e(i), b.e(1)) = detail::signed_term(i, alpha * power(beta, i - 2), i - 2);
    m(b.e(2), b.e(2)) = gamma;
    for (std::size_t i = 3; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            m(b.e(j), b.e(i)) = detail::signed_term(j - i, power(alpha, i - 1) * power(beta, j - i), j - i);
    m(b.e(1), b.x()) = beta;
    for (std::size_t i = 3; i <= n; ++i) m(b.e(i), b.x()) = detail::signed_term(i, power(beta, i - 1), i - 1);
    m(b.x(), b.x()) = 1;
    if (f == FamilyId::R2) m(b.e(2), b.y()) = p.delta();
    m(b.y(), b.y()) = 1;
    return LinearMap(std::move(m));
}

/// Reads the defining entries of m and returns the parameters iff m is exactly
/// the family member they describe.
inline AutParams recover_params(FamilyId f, std::size_t n, const LinearMap& m) {
    check_n(f, n);
    if (m.source_dim() != family_dim(f, n)) throw ShapeError("map has the wrong dimension for " + to_string(f));
    const Matrix& a = m.matrix();
    std::vector<Scalar> values;
    if (f == FamilyId::R0) {
        values = {a(1, 0), a(1, 1)};
    } else {
        const FilBasis b{n};
        switch (f) {
        case FamilyId::R1: values = {a(b.e(1), b.e(1)), a(b.e(2), b.e(2)), a(b.e(1), b.x())}; break;
        case FamilyId::R2:
            values = {a(b.e(1), b.e(1)), a(b.e(1), b.x()), a(b.e(2), b.e(2)), a(b.e(2), b.y())};
            break;
        default: values = {a(b.e(1), b.e(1)), a(b.e(1), b.x()), a(b.e(2), b.e(2))}; break;
        }
    }
    AutParams p(f, std::move(values));
    if (!p.is_valid()) throw NotInFamilyError("defining entries violate the nonvanishing condition");
    if (!(aut_matrix(f, n, p) == m)) throw NotInFamilyError("map is not a member of the " + to_string(f) + " family");
    return p;
}

/// Parameters of aut(outer) * aut(inner). The laws were derived from exact
/// matrix products and are re-checked against them in the test suite.
inline AutParams compose_params(FamilyId f, const AutParams& outer, const AutParams& inner) {
    if (outer.family() != f || inner.family() != f) throw ParamError("parameter family mismatch");
    outer.validate();
    inner.validate();
    std::vector<Scalar> out;
    switch (f) {
    case FamilyId::R0: out = {outer.alpha() + outer.beta() * inner.alpha(), outer.beta() * inner.beta()}; break;
    case FamilyId::R1:
        out = {outer.alpha() * inner.alpha(), outer.beta() * inner.beta(),
               outer.gamma() + outer.alpha() * inner.gamma()};
        break;
    case FamilyId::R2:
        out = {outer.alpha() * inner.alpha(), outer.beta() + outer.alpha() * inner.beta(),
               outer.gamma() * inner.gamma(), outer.delta() + outer.gamma() * inner.delta()};
        break;
    case FamilyId::R3:
        out = {outer.alpha() * inner.alpha(), outer.beta() + outer.alpha() * inner.beta(),
               outer.gamma() * inner.gamma()};
        break;
    }
    AutParams result(f, std::move(out));
    if (!result.is_valid()) throw ParamError("composed parameters violate the nonvanishing condition");
    return result;
}

/// Parameters of the inverse automorphism, solved from compose_params.
inline AutParams inverse_params(FamilyId f, const AutParams& p) {
    if (p.family() != f) throw ParamError("parameter family mismatch");
    p.validate();
    switch (f) {
    case FamilyId::R0: return AutParams(f, {-p.alpha() / p.beta(), 1 / p.beta()});
    case FamilyId::R1: return AutParams(f, {1 / p.alpha(), 1 / p.beta(), -p.gamma() / p.alpha()});
    case FamilyId::R2:
        return AutParams(f, {1 / p.alpha(), -p.beta() / p.alpha(), 1 / p.gamma(), -p.delta() / p.gamma()});
    case FamilyId::R3: return AutParams(f, {1 / p.alpha(), -p.beta() / p.alpha(), 1 / p.gamma()});
    }
    throw ParamError("unknown family");
}

} // namespace leibniz
