// kernels.hpp — dense complex linear-algebra kernels: OpenMP-parallel
// implementations with a serial reference kept for testing.
//
// Both variants accumulate every output element over the inner index in the
// same ascending order, so parallel and serial results are bitwise identical
// and independent of the thread count.  tools/bench_kernels.cpp compares the
// two on propagation-sized problems.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace bilinctl::kernels {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

// Thread configuration for the parallel variants. 0 = hardware default,
// 1 = force the serial path everywhere.
void set_threads(int n);
int thread_count();

namespace detail {

// One column of C = A * B:  C(:,j) = sum_k A(:,k) B(k,j), k ascending.
inline void gemm_col(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C, Index j) {
    auto c = C.col(j);
    c.setZero();
    for (Index k = 0; k < A.cols(); ++k) c += A.col(k) * B(k, j);
}

// One column of C = A * B^H:  C(:,j) = sum_k A(:,k) conj(B(j,k)).
inline void gemm_adjB_col(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C, Index j) {
    auto c = C.col(j);
    c.setZero();
    for (Index k = 0; k < A.cols(); ++k) c += A.col(k) * std::conj(B(j, k));
}

// One entry of y = A * x (row dot, k ascending).
inline cplx gemv_row(const MatrixXcd& A, const VectorXcd& x, Index i) {
    cplx acc(0.0, 0.0);
    for (Index k = 0; k < A.cols(); ++k) acc += A(i, k) * x(k);
    return acc;
}

// One entry of y = A^H * x.
inline cplx gemv_adj_row(const MatrixXcd& A, const VectorXcd& x, Index i) {
    cplx acc(0.0, 0.0);
    for (Index k = 0; k < A.rows(); ++k) acc += std::conj(A(k, i)) * x(k);
    return acc;
}

}  // namespace detail

namespace serial {
void gemm(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C);
void gemm_adjB(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C);
void gemv(const MatrixXcd& A, const VectorXcd& x, VectorXcd& y);
void gemv_adj(const MatrixXcd& A, const VectorXcd& x, VectorXcd& y);
}  // namespace serial

namespace par {
void gemm(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C);
void gemm_adjB(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C);
void gemv(const MatrixXcd& A, const VectorXcd& x, VectorXcd& y);
void gemv_adj(const MatrixXcd& A, const VectorXcd& x, VectorXcd& y);
}  // namespace par

// Dispatched entry points: serial when thread_count() == 1.
MatrixXcd multiply(const MatrixXcd& A, const MatrixXcd& B);
MatrixXcd multiply_adjB(const MatrixXcd& A, const MatrixXcd& B);
VectorXcd apply(const MatrixXcd& A, const VectorXcd& x);
VectorXcd apply_adj(const MatrixXcd& A, const VectorXcd& x);

// Hermitian eigensystem H = V diag(omega) V^H, omega ascending.
struct Eigensystem {
    MatrixXcd V;
    VectorXd omega;
};
Eigensystem hermitian_eigensystem(const MatrixXcd& H);

// U = V diag(exp(i * scale * omega)) V^H.
MatrixXcd unitary_from_eigen(const Eigensystem& es, double scale);

// y = V diag(exp(i * scale * omega)) V^H x without forming U.
VectorXcd evolve_eigen(const Eigensystem& es, double scale, const VectorXcd& x);

// Spectral (operator 2-) norm via SVD.
double spectral_norm(const MatrixXcd& M);

// Scaling-and-squaring matrix exponential for general complex matrices.
// Only used where the generator is not skew-Hermitian (Dyson jet blocks).
MatrixXcd expm(const MatrixXcd& M);

// Compensated (Kahan) summation, fixed left-to-right order.
double kahan_sum(const std::vector<double>& xs);

class KahanAccumulator {
  public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace bilinctl::kernels
