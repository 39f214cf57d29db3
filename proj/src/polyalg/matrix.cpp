#include "logchern/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace logchern {

RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

bool is_square(const RatMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return true;
}

RatMatrix matrix_product(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.front().size();
    RatMatrix out(a.size(), std::vector<Rat>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("matrix_product: shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

Rat determinant(RatMatrix m) {
    if (!is_square(m)) throw std::domain_error("determinant of non-square matrix");
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rat factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!is_square(m)) throw std::domain_error("inverse of non-square matrix");
    const std::size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rat scale = Rat(1) / a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] *= scale;
            inv[col][c] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rat factor = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return inv;
}

std::size_t rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            const Rat factor = m[i][col] / m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[i][c] -= factor * m[r][c];
        }
        ++r;
    }
    return r;
}

}  // namespace logchern
