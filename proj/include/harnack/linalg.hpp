#ifndef HARNACK_LINALG_HPP
#define HARNACK_LINALG_HPP

#include <vector>

#include "harnack/matrix.hpp"

namespace harnack {

/// Real spectrum, sorted descending.
using Spectrum = std::vector<double>;

/// Complex spectrum in canonical order: descending modulus, then descending
/// real part, then descending imaginary part.
using ComplexSpectrum = std::vector<cxd>;

void canonical_sort(ComplexSpectrum& s);

struct HermitianEigen {
    Spectrum values;        // descending
    ComplexMatrix vectors;  // unitary Q, columns match values
};

struct PolarFactors {
    ComplexMatrix v;  // unitary
    ComplexMatrix p;  // Hermitian PSD, z = v * p
};

/// Determinant via partial-pivoted LU.
cxd det_lu(const ComplexMatrix& m);

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
/// Throws NotHermitian when the Hermitian defect exceeds 1e-10 * (1 + max_abs).
HermitianEigen eig_hermitian(const ComplexMatrix& h);

/// All eigenvalues of a general complex matrix: Householder Hessenberg
/// reduction, then shifted QR with Wilkinson shifts. Throws NoConvergence.
ComplexSpectrum eig_general(const ComplexMatrix& a);

/// Singular values: square roots of the descending eigenvalues of a*a,
/// tiny negatives clamped to zero.
Spectrum svd_values(const ComplexMatrix& a);

/// Polar decomposition z = v * p with v unitary (completed from the full SVD
/// when z is singular) and p = (z*z)^{1/2}.
PolarFactors polar(const ComplexMatrix& z);

/// Matrix absolute value |z| = (z*z)^{1/2}, Hermitian PSD.
ComplexMatrix abs_matrix(const ComplexMatrix& z);

/// Multiset comparison of two spectra: true iff a greedy matching after
/// canonical sorting pairs every element of a with a distinct element of b at
/// distance <= tol. Throws LengthMismatch.
bool spec_multiset_equal(ComplexSpectrum a, ComplexSpectrum b, double tol);

} // namespace harnack

#endif
