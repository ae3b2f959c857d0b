#include "pvi/linalg.hpp"

#include <algorithm>

namespace pvi {

cplx lu_determinant(CMatrix m) {
    int n = m.dim();
    if (n == 0) return {1.0, 0.0};
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j)));
    if (scale == 0.0) return {0.0, 0.0};

    cplx det{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(m(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best < 1e-300 * scale)
            throw SingularMatrixError("lu_determinant: pivot underflow");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            det = -det;
        }
        det *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            cplx f = m(i, k) / m(k, k);
            for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

cplx cofactor_determinant(const CMatrix& m) {
    int n = m.dim();
    if (n == 1) return m(0, 0);
    cplx det{0.0, 0.0};
    double sign = 1.0;
    for (int j = 0; j < n; ++j) {
        CMatrix minor(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int col = 0; col < n; ++col) {
                if (col == j) continue;
                minor(r - 1, cc++) = m(r, col);
            }
        }
        det += sign * m(0, j) * cofactor_determinant(minor);
        sign = -sign;
    }
    return det;
}

} // namespace pvi
