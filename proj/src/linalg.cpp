#include "sdelab/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace sdelab {

DenseMatrix::DenseMatrix(int r, int c) : rows(r), cols(c) {
    if (r <= 0 || c <= 0) throw std::invalid_argument("DenseMatrix: dimensions must be positive");
    data.assign(static_cast<std::size_t>(r) * c, 0.0);
}

bool DenseMatrix::is_symmetric(double rel_tol) const {
    if (rows != cols) return false;
    double scale = 0.0;
    for (double v : data) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return true;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (std::fabs((*this)(i, j) - (*this)(j, i)) > rel_tol * scale) return false;
    return true;
}

DenseMatrix gauss_matrix(RngStream& stream, int rows, int cols, double variance) {
    if (!(variance > 0.0)) throw std::invalid_argument("gauss_matrix: variance must be > 0");
    DenseMatrix m(rows, cols);
    double sd = std::sqrt(variance);
    for (double& v : m.data) v = sd * stream.next_gauss();
    return m;
}

DenseMatrix cholesky_psd(const DenseMatrix& a, double pivot_tol) {
    if (a.rows != a.cols) throw std::invalid_argument("cholesky_psd: matrix must be square");
    if (a.rows > 64) throw std::invalid_argument("cholesky_psd: size limited to 64");
    if (!a.is_symmetric()) throw std::invalid_argument("cholesky_psd: matrix must be symmetric");

    const int k = a.rows;
    DenseMatrix f(k, k);
    for (int j = 0; j < k; ++j) {
        double sum = 0.0;
        for (int p = 0; p < j; ++p) sum += f(j, p) * f(j, p);
        double pivot = a(j, j) - sum;
        if (pivot < -pivot_tol)
            throw std::runtime_error("cholesky_psd: matrix is not positive semidefinite");
        if (pivot <= pivot_tol) {
            // Rank-deficient pivot: this column stays zero.
            f(j, j) = 0.0;
            continue;
        }
        f(j, j) = std::sqrt(pivot);
        for (int i = j + 1; i < k; ++i) {
            double s = 0.0;
            for (int p = 0; p < j; ++p) s += f(i, p) * f(j, p);
            f(i, j) = (a(i, j) - s) / f(j, j);
        }
    }
    return f;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double squared_norm(std::span<const double> v) { return dot(v, v); }

double norm(std::span<const double> v) { return std::sqrt(squared_norm(v)); }

} // namespace sdelab
