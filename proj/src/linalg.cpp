#include "risopt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace risopt {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

CMatrix CMatrix::adjoint() const {
    CMatrix A(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            A(j, i) = std::conj((*this)(i, j));
    return A;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("CMatrix multiply: dimension mismatch");
    CMatrix C(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx a = (*this)(i, k);
            if (a == cplx{}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) C(i, j) += a * rhs(k, j);
        }
    }
    return C;
}

CVector CMatrix::operator*(const CVector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("CMatrix*vector: dimension mismatch");
    CVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        cplx acc{};
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double CMatrix::hermitian_defect() const {
    if (rows_ != cols_) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

bool CMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    const double scale = std::max(1.0, frobenius_norm());
    return hermitian_defect() <= tol * scale;
}

double norm_sq(const CVector& v) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return s;
}

double norm(const CVector& v) { return std::sqrt(norm_sq(v)); }

cplx dot(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    cplx acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

namespace {

double offdiag_norm(const CMatrix& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (i != j) s += std::norm(A(i, j));
    return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const CMatrix& H, double hermitian_tol) {
    const std::size_t n = H.rows();
    if (n == 0 || H.cols() != n) throw std::invalid_argument("hermitian_eig: matrix must be square, n >= 1");
    if (!H.is_hermitian(hermitian_tol))
        throw std::invalid_argument("hermitian_eig: input is not Hermitian within tolerance");

    CMatrix A = H;
    // Force exact Hermitian symmetry so rotations stay consistent.
    for (std::size_t i = 0; i < n; ++i) {
        A(i, i) = cplx(A(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (A(i, j) + std::conj(A(j, i)));
            A(i, j) = avg;
            A(j, i) = std::conj(avg);
        }
    }
    CMatrix V = CMatrix::identity(n);

    const double scale = std::max(A.frobenius_norm(), 1e-300);
    const double stop = 1e-11 * scale;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(A) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx g = A(p, q);
                const double mag = std::abs(g);
                if (mag <= 1e-300) continue;
                const double phi = std::arg(g);
                const double alpha = A(p, p).real();
                const double beta = A(q, q).real();
                // Real Jacobi angle for [[alpha, |g|], [|g|, beta]].
                const double tau = (alpha - beta) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // Unitary U restricted to (p,q): U = D * G * conj(D), D = diag(e^{i phi/2}, e^{-i phi/2}).
                const cplx ep = std::polar(1.0, phi / 2.0);
                const cplx em = std::conj(ep);
                const cplx upp = c * ep, uqp = s * em;   // column p
                const cplx upq = -s * ep, uqq = c * em;  // column q

                // A <- U^H A U, applied as column then row updates.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = A(k, p), akq = A(k, q);
                    A(k, p) = akp * upp + akq * uqp;
                    A(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = A(p, k), aqk = A(q, k);
                    A(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    A(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                A(p, p) = cplx(A(p, p).real(), 0.0);
                A(q, q) = cplx(A(q, q).real(), 0.0);

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = vkp * upp + vkq * uqp;
                    V(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return A(a, a).real() > A(b, b).real(); });

    EigResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        res.eigenvalues[j] = A(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) res.eigenvectors(i, j) = V(i, order[j]);
    }
    return res;
}

}  // namespace risopt
