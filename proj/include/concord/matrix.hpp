#pragma once

#include <cstddef>
#include <vector>

#include "concord/laurent.hpp"

namespace concord {

/// Square-capable matrix of Laurent polynomials. Carries the linking matrices
/// B and D of the wheel-surgery formula and the Seifert presentation V - tV^T.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static LaurentMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    LaurentPoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Entrywise conjugate (t <-> t^-1) followed by transposition: A*.
    LaurentMatrix conjugate_transpose() const;

    bool operator==(const LaurentMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> data_;
};

/// Exact determinant over Z[t, t^-1] (fraction-free Bareiss elimination after
/// clearing each row's negative exponents). Determinant of the empty matrix is 1.
LaurentPoly laurent_det(const LaurentMatrix& m);

} // namespace concord
