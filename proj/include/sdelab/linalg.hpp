#pragma once

#include <span>
#include <vector>

#include "sdelab/rng.hpp"

namespace sdelab {

// Small dense row-major matrix. Everything in this project is at most a few
// thousand entries; no BLAS ambitions.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c);

    double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    // Entry-symmetric within a relative tolerance of the largest entry.
    bool is_symmetric(double rel_tol = 1e-12) const;
};

// Fill a matrix with iid N(0, variance) entries, row-major draw order.
// variance must be strictly positive.
DenseMatrix gauss_matrix(RngStream& stream, int rows, int cols, double variance);

// Lower-triangular factor F with F*F^T = a for a symmetric positive
// semidefinite matrix. A pivot whose magnitude falls below pivot_tol zeroes
// its column (rank deficiency is legal; Gram matrices of identical inputs
// produce it). A pivot below -pivot_tol raises not-PSD.
DenseMatrix cholesky_psd(const DenseMatrix& a, double pivot_tol);

// Sequential dot product; shared by the network and SDE steppers so that
// coinciding code paths accumulate bit-identically.
double dot(std::span<const double> a, std::span<const double> b);

double squared_norm(std::span<const double> v);
double norm(std::span<const double> v);

} // namespace sdelab
