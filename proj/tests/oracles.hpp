// Test-only oracles, independent of the library's eigensolvers: 2x2 spectra
// via the characteristic-polynomial quadratic formula, and random matrix
// helpers driven directly by the library RNG.
#ifndef HARNACK_TESTS_ORACLES_HPP
#define HARNACK_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "harnack/matrix.hpp"
#include "harnack/rng.hpp"

namespace harnack::testing {

// Both eigenvalues of a 2x2 complex matrix from trace and determinant.
inline std::array<cxd, 2> eig2x2_oracle(const ComplexMatrix& a) {
    const cxd tr = a(0, 0) + a(1, 1);
    const cxd det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const cxd disc = std::sqrt(0.25 * tr * tr - det);
    return {0.5 * tr + disc, 0.5 * tr - disc};
}

// Descending real eigenvalues of a 2x2 Hermitian matrix.
inline std::array<double, 2> eig2x2_hermitian_oracle(const ComplexMatrix& a) {
    const double tr = a(0, 0).real() + a(1, 1).real();
    const double det = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    return {0.5 * tr + disc, 0.5 * tr - disc};
}

// Descending singular values of a 2x2 complex matrix via eig of a*a.
inline std::array<double, 2> sv2x2_oracle(const ComplexMatrix& a) {
    const auto g = eig2x2_hermitian_oracle(a.adjoint() * a);
    return {std::sqrt(std::max(0.0, g[0])), std::sqrt(std::max(0.0, g[1]))};
}

inline ComplexMatrix random_dense(std::size_t n, RngState& rng, double scale = 1.0) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = scale * rng.next_complex_gaussian();
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, RngState& rng, double scale = 1.0) {
    const ComplexMatrix g = random_dense(n, rng, scale);
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const cxd avg = 0.5 * (g(i, j) + std::conj(g(j, i)));
            h(i, j) = avg;
            h(j, i) = std::conj(avg);
        }
        h(i, i) = cxd{h(i, i).real(), 0.0};
    }
    return h;
}

// Hypothesis-satisfying pair for the shift lemma: y random positive, x a
// log-space Robin Hood transfer of y (equal total product, strictly
// log-majorized, never a permutation).
inline std::pair<std::vector<double>, std::vector<double>> log_majorized_pair(std::size_t n,
                                                                              RngState& rng,
                                                                              double lo, double hi) {
    std::vector<double> y(n);
    std::vector<double> ly(n);
    do {  // reject nearly-constant draws; the transfer needs a real gap
        for (double& v : y) v = lo + (hi - lo) * rng.next_uniform();
        std::sort(y.begin(), y.end(), std::greater<>());
        for (std::size_t k = 0; k < n; ++k) ly[k] = std::log(y[k]);
    } while (ly.front() - ly.back() < 1e-3);

    const std::size_t i = 0, j = n - 1;
    // move mass from the log-largest to the log-smallest entry; staying below
    // half the gap keeps x strictly inside the majorization cone
    const double d = (0.1 + 0.8 * rng.next_uniform()) * 0.5 * (ly[i] - ly[j]);
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = y[k];
    x[i] = std::exp(ly[i] - d);
    x[j] = std::exp(ly[j] + d);
    std::sort(x.begin(), x.end(), std::greater<>());
    return {x, y};
}

} // namespace harnack::testing

#endif
