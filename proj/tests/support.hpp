#pragma once

#include <random>
#include <vector>

#include "leibniz/leibniz.hpp"

namespace testing_support {

using namespace leibniz;

inline Scalar random_scalar(std::mt19937_64& rng, long num_range = 9, long den_max = 7) {
    std::uniform_int_distribution<long> num(-num_range, num_range), den(1, den_max);
    return make_scalar(num(rng), den(rng));
}

inline Scalar random_nonzero(std::mt19937_64& rng) {
    for (;;) {
        Scalar s = random_scalar(rng);
        if (sgn(s) != 0) return s;
    }
}

/// A parameter tuple satisfying the family's nonvanishing condition.
inline AutParams random_params(FamilyId f, std::mt19937_64& rng) {
    for (;;) {
        std::vector<Scalar> v;
        for (std::size_t k = 0; k < parameter_count(f); ++k) v.push_back(random_scalar(rng));
        AutParams p(f, v);
        if (p.is_valid()) return p;
    }
}

/// Structure constants drawn at random; not Leibniz in general.
inline Algebra random_algebra(std::mt19937_64& rng, std::size_t dim, double density = 0.3) {
    std::bernoulli_distribution keep(density);
    Algebra a(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (!keep(rng)) continue;
            Vector v(dim);
            for (auto& x : v)
                if (keep(rng)) x = random_scalar(rng);
            a.set_product(i, j, v);
        }
    return a;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.6) {
    std::bernoulli_distribution keep(density);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng)) m(r, c) = random_scalar(rng);
    return m;
}

inline Poly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms = 4) {
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    std::uniform_int_distribution<unsigned> expo(0, 2);
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int f = 0; f < 2; ++f) m = m * Monomial::variable(vars[pick(rng)], expo(rng));
        p += Poly::term(random_scalar(rng), m);
    }
    return p;
}

} // namespace testing_support
