#include "harnack/random_matrix.hpp"

#include <cmath>
#include <vector>

namespace harnack {

ComplexMatrix haar_unitary(std::size_t n, RngState& rng) {
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian();

    // Modified Gram-Schmidt with one reorthogonalization pass. The column
    // norms (the R diagonal) are positive reals, which is exactly the QR
    // normalization that makes Q Haar-distributed.
    ComplexMatrix q = g;
    for (std::size_t k = 0; k < n; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                cxd dot{0.0, 0.0};
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, j)) * q(i, k);
                for (std::size_t i = 0; i < n; ++i) q(i, k) -= dot * q(i, j);
            }
        }
        double nk = 0.0;
        for (std::size_t i = 0; i < n; ++i) nk += std::norm(q(i, k));
        nk = std::sqrt(nk);
        if (nk <= 1e-300) {
            // a numerically dependent Gaussian column has probability zero;
            // resample it rather than fail
            for (std::size_t i = 0; i < n; ++i) q(i, k) = rng.next_complex_gaussian();
            --k;
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) q(i, k) /= nk;
    }
    return q;
}

ComplexMatrix random_psd_contraction(std::size_t n, RngState& rng, double eig_lo, double eig_hi) {
    if (!(eig_lo >= 0.0 && eig_lo <= eig_hi && eig_hi < 1.0)) {
        throw Error(ErrorKind::BadRange, "eigenvalue range must satisfy 0 <= lo <= hi < 1");
    }
    const ComplexMatrix q = haar_unitary(n, rng);
    std::vector<double> r(n);
    for (double& v : r) v = eig_lo + (eig_hi - eig_lo) * rng.next_uniform();
    ComplexMatrix z = q * ComplexMatrix::diagonal_real(r) * q.adjoint();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const cxd avg = 0.5 * (z(i, j) + std::conj(z(j, i)));
            z(i, j) = avg;
            z(j, i) = std::conj(avg);
        }
        z(i, i) = cxd{z(i, i).real(), 0.0};
    }
    return z;
}

ComplexMatrix random_with_singular_values(std::size_t n, RngState& rng, double sv_lo, double sv_hi) {
    if (!(sv_lo >= 0.0 && sv_lo <= sv_hi)) {
        throw Error(ErrorKind::BadRange, "singular value range must satisfy 0 <= lo <= hi");
    }
    const ComplexMatrix u1 = haar_unitary(n, rng);
    const ComplexMatrix u2 = haar_unitary(n, rng);
    std::vector<double> r(n);
    for (double& v : r) v = sv_lo + (sv_hi - sv_lo) * rng.next_uniform();
    return u1 * ComplexMatrix::diagonal_real(r) * u2.adjoint();
}

} // namespace harnack
