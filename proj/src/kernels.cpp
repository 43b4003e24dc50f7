#include "bilinctl/kernels.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <omp.h>

#include <atomic>
#include <stdexcept>

namespace bilinctl::kernels {

namespace {
std::atomic<int> g_threads{1};

int resolve_threads() {
    const int n = g_threads.load(std::memory_order_relaxed);
    if (n == 0) return omp_get_max_threads();
    return n;
}
}  // namespace

void set_threads(int n) {
    if (n < 0) throw std::invalid_argument("set_threads: thread count must be >= 0");
    g_threads.store(n, std::memory_order_relaxed);
}

int thread_count() { return resolve_threads(); }

namespace serial {

void gemm(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C) {
    C.resize(A.rows(), B.cols());
    for (Index j = 0; j < B.cols(); ++j) detail::gemm_col(A, B, C, j);
}

void gemm_adjB(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C) {
    C.resize(A.rows(), B.rows());
    for (Index j = 0; j < B.rows(); ++j) detail::gemm_adjB_col(A, B, C, j);
}

void gemv(const MatrixXcd& A, const VectorXcd& x, VectorXcd& y) {
    y.resize(A.rows());
    for (Index i = 0; i < A.rows(); ++i) y(i) = detail::gemv_row(A, x, i);
}

void gemv_adj(const MatrixXcd& A, const VectorXcd& x, VectorXcd& y) {
    y.resize(A.cols());
    for (Index i = 0; i < A.cols(); ++i) y(i) = detail::gemv_adj_row(A, x, i);
}

}  // namespace serial

namespace par {

void gemm(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C) {
    C.resize(A.rows(), B.cols());
    const int nt = resolve_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (Index j = 0; j < B.cols(); ++j) detail::gemm_col(A, B, C, j);
}

void gemm_adjB(const MatrixXcd& A, const MatrixXcd& B, MatrixXcd& C) {
    C.resize(A.rows(), B.rows());
    const int nt = resolve_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (Index j = 0; j < B.rows(); ++j) detail::gemm_adjB_col(A, B, C, j);
}

void gemv(const MatrixXcd& A, const VectorXcd& x, VectorXcd& y) {
    y.resize(A.rows());
    const int nt = resolve_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (Index i = 0; i < A.rows(); ++i) y(i) = detail::gemv_row(A, x, i);
}

void gemv_adj(const MatrixXcd& A, const VectorXcd& x, VectorXcd& y) {
    y.resize(A.cols());
    const int nt = resolve_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (Index i = 0; i < A.cols(); ++i) y(i) = detail::gemv_adj_row(A, x, i);
}

}  // namespace par

MatrixXcd multiply(const MatrixXcd& A, const MatrixXcd& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    MatrixXcd C;
    if (resolve_threads() > 1)
        par::gemm(A, B, C);
    else
        serial::gemm(A, B, C);
    return C;
}

MatrixXcd multiply_adjB(const MatrixXcd& A, const MatrixXcd& B) {
    if (A.cols() != B.cols()) throw std::invalid_argument("multiply_adjB: dimension mismatch");
    MatrixXcd C;
    if (resolve_threads() > 1)
        par::gemm_adjB(A, B, C);
    else
        serial::gemm_adjB(A, B, C);
    return C;
}

VectorXcd apply(const MatrixXcd& A, const VectorXcd& x) {
    if (A.cols() != x.size()) throw std::invalid_argument("apply: dimension mismatch");
    VectorXcd y;
    if (resolve_threads() > 1)
        par::gemv(A, x, y);
    else
        serial::gemv(A, x, y);
    return y;
}

VectorXcd apply_adj(const MatrixXcd& A, const VectorXcd& x) {
    if (A.rows() != x.size()) throw std::invalid_argument("apply_adj: dimension mismatch");
    VectorXcd y;
    if (resolve_threads() > 1)
        par::gemv_adj(A, x, y);
    else
        serial::gemv_adj(A, x, y);
    return y;
}

Eigensystem hermitian_eigensystem(const MatrixXcd& H) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(H);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigensystem: eigendecomposition failed (condition of input?)");
    return Eigensystem{solver.eigenvectors(), solver.eigenvalues()};
}

MatrixXcd unitary_from_eigen(const Eigensystem& es, double scale) {
    MatrixXcd W = es.V;
    for (Index k = 0; k < W.cols(); ++k)
        W.col(k) *= std::polar(1.0, scale * es.omega(k));
    return multiply_adjB(W, es.V);
}

VectorXcd evolve_eigen(const Eigensystem& es, double scale, const VectorXcd& x) {
    VectorXcd t = apply_adj(es.V, x);
    for (Index k = 0; k < t.size(); ++k)
        t(k) *= std::polar(1.0, scale * es.omega(k));
    return apply(es.V, t);
}

double spectral_norm(const MatrixXcd& M) {
    if (M.size() == 0) return 0.0;
    Eigen::JacobiSVD<MatrixXcd> svd(M);
    return svd.singularValues()(0);
}

MatrixXcd expm(const MatrixXcd& M) { return M.exp(); }

double kahan_sum(const std::vector<double>& xs) {
    KahanAccumulator acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

}  // namespace bilinctl::kernels
