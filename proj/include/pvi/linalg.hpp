#ifndef PVI_LINALG_HPP
#define PVI_LINALG_HPP

#include <vector>

#include "pvi/complex_utils.hpp"

namespace pvi {

// Dense square complex matrix, row-major.
class CMatrix {
  public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(size_t(n) * size_t(n), cplx(0.0, 0.0)) {}

    int dim() const { return n_; }
    cplx& operator()(int i, int j) { return a_[size_t(i) * size_t(n_) + size_t(j)]; }
    cplx operator()(int i, int j) const { return a_[size_t(i) * size_t(n_) + size_t(j)]; }

  private:
    int n_ = 0;
    std::vector<cplx> a_;
};

// Determinant by partial-pivoted LU.  Throws SingularMatrixError when a pivot
// underflows relative to the matrix scale.
cplx lu_determinant(CMatrix m);

// Real symmetric-free determinant for real matrices is not needed; everything
// here runs in complex arithmetic.

// det of the leading n x n block by cofactor expansion; O(n!) -- test oracle
// use only, kept here so the acceptance suite can cross-check LU.
cplx cofactor_determinant(const CMatrix& m);

} // namespace pvi

#endif
