#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/linear_map.hpp"

namespace leibniz {

struct HomomorphismCheck {
    bool holds = true;
    /// First basis pair (i, j), in lexicographic order, where
    /// m([b_i, b_j]) != [m(b_i), m(b_j)].
    std::optional<std::pair<std::size_t, std::size_t>> counterexample;
    /// Result of the random-vector smoke test. Advisory only: the basis-pair
    /// check above is the contract.
    bool smoke_ok = true;

    explicit operator bool() const { return holds; }
};

namespace detail {

inline Vector random_vector(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    Vector v(dim);
    for (auto& x : v) x = make_scalar(num(rng), den(rng));
    return v;
}

} // namespace detail

inline HomomorphismCheck is_homomorphism(const Algebra& a, const LinearMap& m, unsigned long seed = 0) {
    if (m.source_dim() != a.dim()) throw ShapeError("map dimension does not match the algebra");
    const std::size_t n = a.dim();
    HomomorphismCheck out;

    std::vector<Vector> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(m.image(i));
    for (std::size_t i = 0; i < n && out.holds; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(a.product(i, j)) != bracket(a, images[i], images[j])) {
                out.holds = false;
                out.counterexample = {i, j};
                break;
            }
        }
    }

    std::mt19937_64 rng(seed);
    for (int t = 0; t < 20; ++t) {
        const Vector u = detail::random_vector(n, rng);
        const Vector v = detail::random_vector(n, rng);
        if (m(bracket(a, u, v)) != bracket(a, m(u), m(v))) {
            out.smoke_ok = false;
            break;
        }
    }
    return out;
}

inline bool is_invertible(const LinearMap& m) { return rank(m.matrix()) == m.source_dim(); }

inline bool is_automorphism(const Algebra& a, const LinearMap& m) {
    return is_homomorphism(a, m).holds && is_invertible(m);
}

/// D([x, y]) = [D x, y] + [x, D y] on all basis pairs.
inline bool is_derivation(const Algebra& a, const Matrix& d) {
    if (d.rows() != a.dim() || d.cols() != a.dim()) throw ShapeError("derivation matrix has wrong shape");
    const std::size_t n = a.dim();
    std::vector<Vector> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(d.col(i));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vector rhs = bracket(a, images[i], basis_vector(n, j));
            axpy(rhs, 1, bracket(a, basis_vector(n, i), images[j]));
            if (leibniz::apply(d, a.product(i, j)) != rhs) return false;
        }
    }
    return true;
}

struct DerivationBasis {
    std::vector<Matrix> elements;
    std::size_t dimension() const { return elements.size(); }
};

/// Solves D([b_i,b_j]) - [D b_i, b_j] - [b_i, D b_j] = 0 as one linear system.
/// Unknown D(p, q) sits at position p*dim + q; equations are assembled for
/// pairs (i, j) in lexicographic order, coordinate k innermost.
inline DerivationBasis derivation_space(const Algebra& a) {
    const std::size_t n = a.dim();
    const auto unknown = [n](std::size_t p, std::size_t q) { return p * n + q; };

    Matrix system(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t base = (i * n + j) * n;
            const Vector w = a.product(i, j);
            // D([b_i, b_j]) contributes sum_m c_{ij}^m D(k, m).
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m)
                    if (sgn(w[m]) != 0) system(base + k, unknown(k, m)) += w[m];
        }
    }
    for (const auto& [key, value] : a.table()) {
        const auto& [m, j] = key;
        // -[D b_i, b_j] contributes -D(m, i) c_{m j}^k to equation (i, j, k).
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(value[k]) != 0) system((i * n + j) * n + k, unknown(m, i)) -= value[k];
    }
    for (const auto& [key, value] : a.table()) {
        const auto& [i, m] = key;
        // -[b_i, D b_j] contributes -D(m, j) c_{i m}^k.
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(value[k]) != 0) system((i * n + j) * n + k, unknown(m, j)) -= value[k];
    }

    DerivationBasis out;
    for (const auto& v : nullspace(system)) {
        Matrix d(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) d(p, q) = v(unknown(p, q), 0);
        out.elements.push_back(std::move(d));
    }
    return out;
}

/// Smallest k <= dim with d^k = 0, if any.
inline std::optional<std::size_t> nilpotency_degree(const Matrix& d) {
    if (!d.is_square()) throw ShapeError("nilpotency needs a square matrix");
    if (d.rows() == 0) return 0;
    Matrix p = Matrix::identity(d.rows());
    for (std::size_t k = 1; k <= d.rows(); ++k) {
        p = multiply(p, d);
        if (p.is_zero()) return k;
    }
    return std::nullopt;
}

/// exp(D) = sum_{m < k} D^m / m! for a nilpotent derivation D with D^k = 0.
inline LinearMap exp_derivation(const Algebra& a, const Matrix& d) {
    if (!is_derivation(a, d)) throw NotDerivationError("matrix is not a derivation of the algebra");
    const auto k = nilpotency_degree(d);
    if (!k) throw NotNilpotentError("derivation is not nilpotent; its exponential is not a finite sum");
    const std::size_t n = a.dim();
    Matrix sum = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (std::size_t m = 1; m < *k; ++m) {
        term = multiply(term, d).scaled(make_scalar(1, static_cast<long>(m)));
        sum = sum + term;
    }
    return LinearMap(std::move(sum));
}

/// Right multiplication v -> [v, x]; a derivation in any Leibniz algebra.
inline Matrix right_multiplication(const Algebra& a, const Vector& x) {
    const std::size_t n = a.dim();
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) r.set_col(i, bracket(a, basis_vector(n, i), x));
    return r;
}

} // namespace leibniz
