#ifndef HARNACK_RANDOM_MATRIX_HPP
#define HARNACK_RANDOM_MATRIX_HPP

#include "harnack/matrix.hpp"
#include "harnack/rng.hpp"

namespace harnack {

/// Haar-distributed unitary: QR of an i.i.d. complex-Gaussian matrix with the
/// R diagonal normalized positive. Deterministic for a given RngState.
ComplexMatrix haar_unitary(std::size_t n, RngState& rng);

/// Z = Q diag(r) Q* with Q Haar and r_k uniform in [eig_lo, eig_hi].
/// Requires 0 <= eig_lo <= eig_hi < 1.
ComplexMatrix random_psd_contraction(std::size_t n, RngState& rng, double eig_lo, double eig_hi);

/// General matrix U1 diag(r) U2* with independent Haar factors and singular
/// values uniform in [sv_lo, sv_hi]. A contraction when sv_hi < 1.
ComplexMatrix random_with_singular_values(std::size_t n, RngState& rng, double sv_lo, double sv_hi);

} // namespace harnack

#endif
