#include "surgery/determinant.hpp"

#include "surgery/errors.hpp"

#include <utility>

namespace surgery {

namespace {

template <typename Matrix>
void require_square(const Matrix& m) {
    if (m.empty()) {
        throw ValidationError("determinant of an empty matrix");
    }
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw ValidationError("determinant needs a square matrix");
        }
    }
}

} // namespace

Integer bareiss_determinant(IntMatrix m) {
    require_square(m);
    const std::size_t n = m.size();
    Integer sign(1);
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return Integer(0);
            }
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by the Desnanot-Jacobi identity: prev divides the product.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational rational_determinant(RatMatrix m) {
    require_square(m);
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != k) {
            std::swap(m[k], m[pivot]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) {
                continue;
            }
            const Rational factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) {
                m[i][j] -= factor * m[k][j];
            }
        }
    }
    return det;
}

} // namespace surgery
