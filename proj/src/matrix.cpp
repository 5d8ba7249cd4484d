#include "cremona/matrix.hpp"

#include <utility>

namespace cremona {

QMatrix inverse(const QMatrix& a) {
    if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    QMatrix m = a;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        const Rational p = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rational determinant(QMatrix a) {
    if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

std::size_t rank(QMatrix a) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

QMatrix pairing_form(std::size_t n) {
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = i == 0 ? 1 : -1;
    return g;
}

} // namespace cremona
