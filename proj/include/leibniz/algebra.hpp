#pragma once

// Finite-dimensional algebras given by structure constants on a fixed basis,
// together with the Leibniz identity check, derived and lower central series
// and the predicates built on them.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/exactnum.hpp"

namespace leibniz {

/// Coordinates with respect to the ambient basis.
using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t dim) { return Vector(dim); }

inline Vector basis_vector(std::size_t dim, std::size_t i, const Scalar& value = 1) {
    Vector v(dim);
    v.at(i) = value;
    return v;
}

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline Vector& axpy(Vector& y, const Scalar& a, const Vector& x) {
    if (sgn(a) == 0) return y;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += a * x[i];
    return y;
}

inline Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    Vector out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

/// Algebra on basis b_0..b_{dim-1}. Only nonzero products are stored; a pair
/// absent from the table multiplies to zero.
class Algebra {
public:
    using Table = std::map<std::pair<std::size_t, std::size_t>, Vector>;

    explicit Algebra(std::size_t dim) : dim_(dim) {
        for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
    }

    Algebra(std::vector<std::string> labels, Table table = {}) : dim_(labels.size()), labels_(std::move(labels)) {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size()) throw ShapeError("basis labels must be pairwise distinct");
        for (auto& [key, value] : table) set_product(key.first, key.second, std::move(value));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const Table& table() const { return table_; }

    std::optional<std::size_t> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < dim_; ++i)
            if (labels_[i] == label) return i;
        return std::nullopt;
    }

    /// Sets [b_i, b_j] = value; a zero value erases the entry.
    void set_product(std::size_t i, std::size_t j, Vector value) {
        if (i >= dim_ || j >= dim_) throw ShapeError("product index out of range");
        if (value.size() != dim_) throw ShapeError("product vector has wrong length");
        if (is_zero(value))
            table_.erase({i, j});
        else
            table_[{i, j}] = std::move(value);
    }

    /// [b_i, b_j] += coeff * b_k
    void add_product(std::size_t i, std::size_t j, std::size_t k, const Scalar& coeff) {
        Vector v = product(i, j);
        v.at(k) += coeff;
        set_product(i, j, std::move(v));
    }

    Vector product(std::size_t i, std::size_t j) const {
        auto it = table_.find({i, j});
        return it == table_.end() ? zero_vector(dim_) : it->second;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim_ == b.dim_ && a.labels_ == b.labels_ && a.table_ == b.table_;
    }

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    Table table_;
};

inline Algebra abelian_algebra(std::size_t dim) { return Algebra(dim); }

inline Vector bracket(const Algebra& a, const Vector& u, const Vector& v) {
    if (u.size() != a.dim() || v.size() != a.dim()) throw ShapeError("bracket operand has wrong length");
    Vector out(a.dim());
    for (const auto& [key, value] : a.table()) {
        const auto& [i, j] = key;
        if (sgn(u[i]) == 0 || sgn(v[j]) == 0) continue;
        axpy(out, u[i] * v[j], value);
    }
    return out;
}

struct LeibnizViolation {
    std::size_t i, j, k;
    /// [[b_i,b_j],b_k] - [[b_i,b_k],b_j] - [b_i,[b_j,b_k]]
    Vector discrepancy;
};

/// Checks [[x,y],z] = [[x,z],y] + [x,[y,z]] on all basis triples, which is
/// enough by trilinearity.
inline std::vector<LeibnizViolation> check_leibniz(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<LeibnizViolation> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector bi = basis_vector(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vector bk = basis_vector(n, k);
                Vector d = bracket(a, ij, bk);
                axpy(d, -1, bracket(a, a.product(i, k), basis_vector(n, j)));
                axpy(d, -1, bracket(a, bi, a.product(j, k)));
                if (!is_zero(d)) out.push_back({i, j, k, std::move(d)});
            }
        }
    }
    return out;
}

/// Linear subspace of Q^dim stored as the nonzero rows of a matrix in reduced
/// row-echelon form, so two equal subspaces have identical representations.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(std::size_t ambient_dim) {
        Subspace s(ambient_dim);
        s.basis_ = Matrix::identity(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
        return s;
    }

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
        Matrix m(generators.size(), ambient_dim);
        for (std::size_t r = 0; r < generators.size(); ++r) {
            if (generators[r].size() != ambient_dim) throw ShapeError("generator has wrong length");
            for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = generators[r][c];
        }
        return from_rows(std::move(m));
    }

    /// Span of the listed basis vectors b_i.
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
        std::vector<Vector> gens;
        for (auto i : indices) gens.push_back(basis_vector(ambient_dim, i));
        return span(ambient_dim, gens);
    }

    static Subspace from_rows(Matrix rows) {
        Subspace s(rows.cols());
        RrefResult r = rref(std::move(rows));
        s.basis_ = Matrix(r.rank, s.ambient_);
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t c = 0; c < s.ambient_; ++c) s.basis_(i, c) = r.reduced(i, c);
        s.pivots_ = std::move(r.pivot_columns);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    bool is_zero() const { return rank() == 0; }
    const Matrix& basis() const { return basis_; }
    Vector basis_vector_at(std::size_t r) const { return basis_.row(r); }
    std::vector<Vector> basis_vectors() const {
        std::vector<Vector> out;
        for (std::size_t r = 0; r < rank(); ++r) out.push_back(basis_.row(r));
        return out;
    }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    /// Coordinates of v in this basis, or nullopt when v is not in the span.
    /// Because the basis is reduced, the coordinates are read off the pivots.
    std::optional<Vector> coordinates(const Vector& v) const {
        if (v.size() != ambient_) throw ShapeError("vector has wrong length");
        Vector coords(rank());
        Vector rebuilt(ambient_);
        for (std::size_t r = 0; r < rank(); ++r) {
            coords[r] = v[pivots_[r]];
            axpy(rebuilt, coords[r], basis_.row(r));
        }
        if (rebuilt != v) return std::nullopt;
        return coords;
    }

    bool contains(const Vector& v) const { return coordinates(v).has_value(); }

    bool is_subspace_of(const Subspace& other) const {
        for (std::size_t r = 0; r < rank(); ++r)
            if (!other.contains(basis_.row(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// span{ [x, y] : x in s, y in t }
inline Subspace subspace_product(const Algebra& a, const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != a.dim() || t.ambient_dim() != a.dim()) throw ShapeError("subspace not in algebra");
    std::vector<Vector> gens;
    for (std::size_t p = 0; p < s.rank(); ++p) {
        const Vector x = s.basis_vector_at(p);
        for (std::size_t q = 0; q < t.rank(); ++q) {
            Vector b = bracket(a, x, t.basis_vector_at(q));
            if (!is_zero(b)) gens.push_back(std::move(b));
        }
    }
    return Subspace::span(a.dim(), gens);
}

namespace detail {

template <typename Next>
std::vector<Subspace> descend(const Algebra& a, Next next) {
    std::vector<Subspace> series{Subspace::full(a.dim())};
    while (!series.back().is_zero()) {
        Subspace term = next(series.back());
        const bool stable = term == series.back();
        series.push_back(std::move(term));
        if (stable) break;
    }
    return series;
}

inline std::optional<std::size_t> index_of_zero(const std::vector<Subspace>& series) {
    for (std::size_t k = 0; k < series.size(); ++k)
        if (series[k].is_zero()) return k + 1;
    return std::nullopt;
}

} // namespace detail

/// L^1 = L, L^{k+1} = [L^k, L]. Stops at the zero subspace or at the first
/// repeated term (which is kept, so a non-nilpotent tail shows up twice).
inline std::vector<Subspace> lower_central_series(const Algebra& a) {
    const Subspace whole = Subspace::full(a.dim());
    return detail::descend(a, [&](const Subspace& s) { return subspace_product(a, s, whole); });
}

/// L^[1] = L, L^[k+1] = [L^[k], L^[k]], with the same stopping rule.
inline std::vector<Subspace> derived_series(const Algebra& a) {
    return detail::descend(a, [&](const Subspace& s) { return subspace_product(a, s, s); });
}

inline std::vector<std::size_t> dimensions(const std::vector<Subspace>& series) {
    std::vector<std::size_t> out;
    for (const auto& s : series) out.push_back(s.rank());
    return out;
}

/// Smallest k with L^k = 0.
inline std::optional<std::size_t> nilpotency_index(const Algebra& a) {
    return detail::index_of_zero(lower_central_series(a));
}

/// Smallest s with L^[s] = 0.
inline std::optional<std::size_t> solvability_index(const Algebra& a) {
    return detail::index_of_zero(derived_series(a));
}

inline bool is_nilpotent(const Algebra& a) { return nilpotency_index(a).has_value(); }
inline bool is_solvable(const Algebra& a) { return solvability_index(a).has_value(); }

/// dim L^i = n + 1 - i for 1 <= i <= n + 1.
inline bool is_null_filiform(const Algebra& a) {
    const std::size_t n = a.dim();
    const auto dims = dimensions(lower_central_series(a));
    if (dims.size() != n + 1) return false;
    for (std::size_t i = 1; i <= n + 1; ++i)
        if (dims[i - 1] != n + 1 - i) return false;
    return true;
}

/// Nilpotent with dim L^i = n - i for 2 <= i <= n.
inline bool is_filiform(const Algebra& a) {
    const std::size_t n = a.dim();
    const auto series = lower_central_series(a);
    if (!detail::index_of_zero(series)) return false;
    for (std::size_t i = 2; i <= n; ++i) {
        const std::size_t d = i - 1 < series.size() ? series[i - 1].rank() : 0;
        if (d != n - i) return false;
    }
    return true;
}

/// {v : [u, v] = 0 for every u}, the nullspace of the stacked operators
/// v -> [b_i, v].
inline Subspace right_annihilator(const Algebra& a) {
    const std::size_t n = a.dim();
    Matrix stacked(n * n, n);
    for (const auto& [key, value] : a.table()) {
        const auto& [i, j] = key;
        for (std::size_t k = 0; k < n; ++k) stacked(i * n + k, j) = value[k];
    }
    std::vector<Vector> gens;
    for (const auto& v : nullspace(stacked)) gens.push_back(v.col(0));
    return Subspace::span(n, gens);
}

/// Induced algebra on s, in the coordinates of s's reduced basis. Basis rows
/// that are coordinate vectors keep their original label.
inline Algebra subalgebra_restrict(const Algebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim()) throw ShapeError("subspace not in algebra");
    const std::size_t m = s.rank();
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < m; ++r) {
        const Vector v = s.basis_vector_at(r);
        std::size_t nonzero = 0;
        for (const auto& x : v) nonzero += sgn(x) != 0;
        const std::size_t p = s.pivot_columns()[r];
        labels.push_back(nonzero == 1 && v[p] == 1 ? a.label(p) : "s" + std::to_string(r));
    }
    Algebra out(labels);
    for (std::size_t p = 0; p < m; ++p) {
        const Vector x = s.basis_vector_at(p);
        for (std::size_t q = 0; q < m; ++q) {
            const Vector b = bracket(a, x, s.basis_vector_at(q));
            auto coords = s.coordinates(b);
            if (!coords)
                throw NotClosedError("[" + labels[p] + "," + labels[q] + "] leaves the subspace");
            out.set_product(p, q, std::move(*coords));
        }
    }
    return out;
}

} // namespace leibniz
