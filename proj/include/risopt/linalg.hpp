#ifndef RISOPT_LINALG_HPP
#define RISOPT_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace risopt {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense row-major complex matrix with fixed dimensions.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix adjoint() const;
    CMatrix operator*(const CMatrix& rhs) const;
    CVector operator*(const CVector& v) const;

    double frobenius_norm() const;

    /// Max |H(i,j) - conj(H(j,i))| over all pairs.
    double hermitian_defect() const;
    bool is_hermitian(double tol = 1e-12) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

double norm(const CVector& v);
double norm_sq(const CVector& v);
/// Inner product sum_i conj(a_i) * b_i.
cplx dot(const CVector& a, const CVector& b);

struct EigResult {
    std::vector<double> eigenvalues;  // descending
    CMatrix eigenvectors;             // column i pairs with eigenvalues[i]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius norm drops below 1e-11 * ||H||_F
/// or 100 sweeps have run. Throws std::invalid_argument if H is not
/// Hermitian within tolerance.
EigResult hermitian_eig(const CMatrix& H, double hermitian_tol = 1e-9);

}  // namespace risopt

#endif
