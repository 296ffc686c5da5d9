#pragma once

#include <cstddef>
#include <utility>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Square linear self-map. Column i holds the coordinates of the image of
/// basis vector b_i, so entry (j, i) is the coefficient a_{j,i} of b_j in
/// phi(b_i).
class LinearMap {
public:
    explicit LinearMap(Matrix m) : matrix_(std::move(m)) {
        if (!matrix_.is_square()) throw ShapeError("linear map matrix must be square");
    }

    static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }
    static LinearMap zero(std::size_t n) { return LinearMap(Matrix(n, n)); }

    std::size_t source_dim() const { return matrix_.rows(); }
    const Matrix& matrix() const { return matrix_; }

    Vector image(std::size_t i) const { return matrix_.col(i); }
    Vector operator()(const Vector& v) const { return leibniz::apply(matrix_, v); }

    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.matrix_ == b.matrix_; }

private:
    Matrix matrix_;
};

inline LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
    return LinearMap(multiply(outer.matrix(), inner.matrix()));
}

} // namespace leibniz
