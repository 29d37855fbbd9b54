#include "concord/matrix.hpp"

#include <stdexcept>

#include "concord/errors.hpp"
#include "concord/zpoly.hpp"

namespace concord {

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

LaurentMatrix LaurentMatrix::conjugate_transpose() const {
    LaurentMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = conjugate(at(i, j));
    return m;
}

LaurentPoly laurent_det(const LaurentMatrix& m) {
    if (!m.is_square()) throw invalid_input_error("laurent_det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);

    // clear each row's negative exponents by a unit t^-s; det picks up t^(sum s)
    long total_shift = 0;
    std::vector<std::vector<zp::Poly>> a(n, std::vector<zp::Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        long row_min = 0;
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            const LaurentPoly& e = m.at(i, j);
            if (e.is_zero()) continue;
            row_min = nonzero ? std::min(row_min, e.min_exp()) : e.min_exp();
            nonzero = true;
        }
        if (!nonzero) return LaurentPoly(); // zero row
        total_shift += row_min;
        for (std::size_t j = 0; j < n; ++j) {
            const LaurentPoly& e = m.at(i, j);
            if (e.is_zero()) continue;
            long shift;
            zp::Poly p = zp::from_laurent_shifted(e, shift);
            a[i][j] = zp::shift_up(p, static_cast<int>(shift - row_min));
        }
    }

    // fraction-free elimination; divisions are exact by Sylvester's identity
    int sign = 1;
    zp::Poly prev{Int(1)};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && zp::is_zero(a[pivot][k])) ++pivot;
        if (pivot == n) return LaurentPoly();
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                zp::Poly num = zp::sub(zp::mul(a[k][k], a[i][j]), zp::mul(a[i][k], a[k][j]));
                zp::Poly q;
                if (!zp::divide_exact(num, prev, q))
                    throw std::logic_error("laurent_det: fraction-free division failed");
                a[i][j] = std::move(q);
            }
            a[i][k].clear();
        }
        prev = a[k][k];
    }
    zp::Poly det = a[n - 1][n - 1];
    if (sign < 0) det = zp::neg(det);
    return zp::to_laurent(det, total_shift);
}

} // namespace concord
