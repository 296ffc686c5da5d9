#pragma once

// Exact rational scalars and dense linear algebra over Q.
//
// Every routine here is exact: no floating point is used anywhere. Pivoting
// is deterministic (first nonzero entry in the leftmost remaining column), so
// reduced forms and nullspace bases are reproducible across platforms.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leibniz/errors.hpp"

namespace leibniz {

/// Canonical rational number (gcd(p, q) = 1, q > 0). GMP keeps results of
/// arithmetic canonical; values built from raw numerator/denominator pairs
/// go through make_scalar().
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
    if (den == 0) throw ParseError("zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

/// Accepts "p" or "p/q" with an optional leading minus; q must be positive.
inline Scalar parse_scalar(std::string_view text) {
    static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
    std::string s(text);
    if (!std::regex_match(s, pattern)) throw ParseError("not a rational literal: '" + s + "'");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    Scalar value(s, 10);
    value.canonicalize();
    return value;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Scalar& s) { return s.get_str(10); }

inline mpz_class factorial(unsigned long k) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

inline Scalar power(const Scalar& base, unsigned long exponent) {
    Scalar out(1);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    out.canonicalize();
    return out;
}

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix column(const std::vector<Scalar>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    std::vector<Scalar> col(std::size_t c) const {
        std::vector<Scalar> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    void set_col(std::size_t c, const std::vector<Scalar>& v) {
        if (v.size() != rows_) throw ShapeError("column length mismatch");
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
        Matrix out(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
        Matrix out(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
        return out;
    }

    Matrix scaled(const Scalar& k) const {
        Matrix out(*this);
        for (auto& x : out.data_) x *= k;
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << to_string(m(r, c));
        os << ']';
    }
    return os << ']';
}

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form by Gauss-Jordan elimination. The elimination only
/// touches the nonzero columns of the pivot row, which keeps the large sparse
/// systems assembled by derivation_space cheap.
inline RrefResult rref(Matrix m) {
    RrefResult out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && sgn(m(r, c)) == 0) ++r;
        if (r == rows) continue;
        m.swap_rows(pivot_row, r);

        const Scalar inv = 1 / m(pivot_row, c);
        support.clear();
        for (std::size_t k = c; k < cols; ++k) {
            if (sgn(m(pivot_row, k)) != 0) {
                m(pivot_row, k) *= inv;
                support.push_back(k);
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || sgn(m(i, c)) == 0) continue;
            const Scalar factor = m(i, c);
            for (std::size_t k : support) m(i, k) -= factor * m(pivot_row, k);
        }
        out.pivot_columns.push_back(c);
        ++pivot_row;
    }
    out.rank = pivot_row;
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis of {v : m v = 0}, one column vector per free column of rref(m), in
/// increasing free-column order.
inline std::vector<Matrix> nullspace(const Matrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivot_columns) is_pivot[p] = true;

    std::vector<Matrix> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Matrix v(m.cols(), 1);
        v(free, 0) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v(r.pivot_columns[i], 0) = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

inline std::vector<Scalar> apply(const Matrix& a, const std::vector<Scalar>& v) {
    if (a.cols() != v.size()) throw ShapeError("matrix/vector length mismatch");
    std::vector<Scalar> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    return out;
}

inline Matrix invert(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("cannot invert a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RrefResult r = rref(std::move(aug));
    if (r.rank < n || (n > 0 && r.pivot_columns[n - 1] != n - 1)) throw SingularError("matrix is singular");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
    return out;
}

} // namespace leibniz
