#include "harnack/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

namespace harnack {

namespace {

std::tuple<double, double, double> sort_key(const cxd& z) {
    return {-std::abs(z), -z.real(), -z.imag()};
}

double offdiag_frobenius(const ComplexMatrix& a) {
    const std::size_t n = a.order();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Eigenvalues of [[p, q], [r, s]] via the quadratic formula.
std::pair<cxd, cxd> eig_2x2(cxd p, cxd q, cxd r, cxd s) {
    const cxd half_tr = 0.5 * (p + s);
    const cxd disc = std::sqrt(0.25 * (p - s) * (p - s) + q * r);
    return {half_tr + disc, half_tr - disc};
}

} // namespace

void canonical_sort(ComplexSpectrum& s) {
    std::sort(s.begin(), s.end(), [](const cxd& a, const cxd& b) { return sort_key(a) < sort_key(b); });
}

cxd det_lu(const ComplexMatrix& m) {
    const std::size_t n = m.order();
    ComplexMatrix a = m;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > best) {
                best = std::abs(a(r, col));
                piv = r;
            }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            sign = -sign;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const cxd f = a(r, col) / a(col, col);
            a(r, col) = f;
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    cxd det{static_cast<double>(sign), 0.0};
    for (std::size_t i = 0; i < n; ++i) det *= a(i, i);
    return det;
}

HermitianEigen eig_hermitian(const ComplexMatrix& h) {
    const std::size_t n = h.order();
    h.require_finite("eig_hermitian");
    if (h.hermitian_defect() > 1e-10 * (1.0 + h.max_abs())) {
        throw Error(ErrorKind::NotHermitian, "Hermitian defect exceeds tolerance");
    }

    // symmetrize exactly so roundoff in the input cannot drift the sweeps
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
        a(i, i) = cxd{a(i, i).real(), 0.0};
    }

    ComplexMatrix q = ComplexMatrix::identity(n);
    const double norm_f = a.frobenius();
    const double target = 1e-14 * norm_f;

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (offdiag_frobenius(a) > target && norm_f > 0.0) {
        if (++sweep > kMaxSweeps) {
            throw Error(ErrorKind::NoConvergence, "Jacobi sweeps did not converge");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const cxd b = a(p, r);
                const double absb = std::abs(b);
                if (absb <= 1e-300) continue;
                const cxd phase = b / absb;
                const double app = a(p, p).real();
                const double arr = a(r, r).real();
                const double tau = (app - arr) / (2.0 * absb);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // unitary J: J(p,p)=c, J(p,r)=-s*phase, J(r,p)=s*conj(phase), J(r,r)=c
                for (std::size_t k = 0; k < n; ++k) {  // A <- A J
                    const cxd akp = a(k, p), akr = a(k, r);
                    a(k, p) = c * akp + s * std::conj(phase) * akr;
                    a(k, r) = -s * phase * akp + c * akr;
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- J* A
                    const cxd apk = a(p, k), ark = a(r, k);
                    a(p, k) = c * apk + s * phase * ark;
                    a(r, k) = -s * std::conj(phase) * apk + c * ark;
                }
                a(p, r) = {0.0, 0.0};
                a(r, p) = {0.0, 0.0};
                a(p, p) = cxd{a(p, p).real(), 0.0};
                a(r, r) = cxd{a(r, r).real(), 0.0};
                for (std::size_t k = 0; k < n; ++k) {  // Q <- Q J
                    const cxd qkp = q(k, p), qkr = q(k, r);
                    q(k, p) = c * qkp + s * std::conj(phase) * qkr;
                    q(k, r) = -s * phase * qkp + c * qkr;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = q(i, order[k]);
    }
    return out;
}

ComplexSpectrum eig_general(const ComplexMatrix& m) {
    const std::size_t n = m.order();
    m.require_finite("eig_general");
    ComplexMatrix h = m;

    // Householder reduction to upper Hessenberg form
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double colnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) colnorm += std::norm(h(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm <= 1e-300) continue;
        const cxd x0 = h(k + 1, k);
        const cxd phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cxd{1.0, 0.0};
        const cxd alpha = -phase * colnorm;
        std::vector<cxd> v(n, cxd{0.0, 0.0});
        for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
        v[k + 1] -= alpha;
        double vnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
        vnorm = std::sqrt(vnorm);
        if (vnorm <= 1e-300) continue;
        for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;
        // H <- (I - 2vv*) H
        for (std::size_t j = 0; j < n; ++j) {
            cxd dot{0.0, 0.0};
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= 2.0 * v[i] * dot;
        }
        // H <- H (I - 2vv*)
        for (std::size_t i = 0; i < n; ++i) {
            cxd dot{0.0, 0.0};
            for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= 2.0 * dot * std::conj(v[j]);
        }
    }

    ComplexSpectrum eigs;
    eigs.reserve(n);
    std::size_t hi = n - 1;  // active trailing index
    const double eps = 1e-15;
    std::size_t iter = 0;
    const std::size_t max_iter = 100 * n;

    auto negligible = [&](std::size_t i) {
        return std::abs(h(i, i - 1)) <= eps * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i)));
    };

    while (true) {
        if (hi == 0) {
            eigs.push_back(h(0, 0));
            break;
        }
        if (negligible(hi)) {
            eigs.push_back(h(hi, hi));
            --hi;
            iter = 0;
            continue;
        }
        if (hi == 1 || negligible(hi - 1)) {
            const auto [l1, l2] = eig_2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            eigs.push_back(l1);
            eigs.push_back(l2);
            if (hi == 1) break;
            hi -= 2;
            iter = 0;
            continue;
        }
        if (++iter > max_iter) {
            throw Error(ErrorKind::NoConvergence, "QR iteration failed to deflate");
        }

        // active block [lo, hi]
        std::size_t lo = hi;
        while (lo > 0 && !negligible(lo)) --lo;

        cxd mu;
        if (iter % 20 == 0) {
            // exceptional shift to break symmetric stalls
            mu = h(hi, hi) + cxd{std::abs(h(hi, hi - 1)), std::abs(h(hi, hi - 1))};
        } else {
            const auto [l1, l2] = eig_2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            mu = (std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi))) ? l1 : l2;
        }

        for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;

        // QR by complex Givens, then RQ
        struct Givens { cxd g11, g12, g21, g22; };
        std::vector<Givens> rots(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) {
            const cxd a = h(i, i), b = h(i + 1, i);
            const double r = std::sqrt(std::norm(a) + std::norm(b));
            Givens g;
            if (r <= 1e-300) {
                g = {cxd{1.0, 0.0}, cxd{0.0, 0.0}, cxd{0.0, 0.0}, cxd{1.0, 0.0}};
            } else {
                g = {std::conj(a) / r, std::conj(b) / r, -b / r, a / r};
            }
            rots[i - lo] = g;
            for (std::size_t j = i; j <= hi; ++j) {
                const cxd hij = h(i, j), h1j = h(i + 1, j);
                h(i, j) = g.g11 * hij + g.g12 * h1j;
                h(i + 1, j) = g.g21 * hij + g.g22 * h1j;
            }
        }
        for (std::size_t i = lo; i < hi; ++i) {
            const Givens& g = rots[i - lo];
            // right-multiply by the conjugate transpose of g
            for (std::size_t k = lo; k <= hi; ++k) {
                const cxd hki = h(k, i), hk1 = h(k, i + 1);
                h(k, i) = hki * std::conj(g.g11) + hk1 * std::conj(g.g12);
                h(k, i + 1) = hki * std::conj(g.g21) + hk1 * std::conj(g.g22);
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
    }

    canonical_sort(eigs);
    return eigs;
}

Spectrum svd_values(const ComplexMatrix& a) {
    const ComplexMatrix g = a.adjoint() * a;
    const HermitianEigen e = eig_hermitian(g);
    Spectrum s(e.values.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] = std::sqrt(std::max(0.0, e.values[k]));
    }
    return s;
}

PolarFactors polar(const ComplexMatrix& z) {
    const std::size_t n = z.order();
    const HermitianEigen e = eig_hermitian(z.adjoint() * z);
    Spectrum sigma(n);
    for (std::size_t k = 0; k < n; ++k) sigma[k] = std::sqrt(std::max(0.0, e.values[k]));
    const ComplexMatrix& x = e.vectors;

    const double sigma_max = sigma.empty() ? 0.0 : sigma.front();
    // sigma comes from sqrt(eig(z*z)), so values below sqrt(eig noise) are
    // indistinguishable from zero and their quotient columns are garbage
    const double cutoff = sigma_max * 1e-7;
    for (double& s : sigma) {
        if (s <= cutoff) s = 0.0;
    }

    // left singular vectors: w_k = z x_k / sigma_k where the rank allows,
    // re-orthonormalized so clustered singular values stay unitary
    const ComplexMatrix y = z * x;
    ComplexMatrix w(n);
    std::vector<bool> filled(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        if (sigma[k] > cutoff && sigma[k] > 0.0) {
            std::vector<cxd> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = y(i, k) / sigma[k];
            for (std::size_t j = 0; j < k; ++j) {
                if (!filled[j]) continue;
                cxd dot{0.0, 0.0};
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(w(i, j)) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= dot * w(i, j);
            }
            double vn = 0.0;
            for (const cxd& c : v) vn += std::norm(c);
            vn = std::sqrt(vn);
            if (vn > 0.5) {
                for (std::size_t i = 0; i < n; ++i) w(i, k) = v[i] / vn;
                filled[k] = true;
            }
        }
    }
    // complete the deficient columns to a unitary basis
    for (std::size_t k = 0; k < n; ++k) {
        if (filled[k]) continue;
        for (std::size_t cand = 0; cand < n; ++cand) {
            std::vector<cxd> v(n, cxd{0.0, 0.0});
            v[cand] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (!filled[j]) continue;
                    cxd dot{0.0, 0.0};
                    for (std::size_t i = 0; i < n; ++i) dot += std::conj(w(i, j)) * v[i];
                    for (std::size_t i = 0; i < n; ++i) v[i] -= dot * w(i, j);
                }
            }
            double vn = 0.0;
            for (const cxd& c : v) vn += std::norm(c);
            vn = std::sqrt(vn);
            if (vn > 0.5) {
                for (std::size_t i = 0; i < n; ++i) w(i, k) = v[i] / vn;
                filled[k] = true;
                break;
            }
        }
        if (!filled[k]) {
            throw Error(ErrorKind::NoConvergence, "polar: unitary completion failed");
        }
    }

    PolarFactors out;
    out.v = w * x.adjoint();
    ComplexMatrix p = x * ComplexMatrix::diagonal_real(sigma) * x.adjoint();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const cxd avg = 0.5 * (p(i, j) + std::conj(p(j, i)));
            p(i, j) = avg;
            p(j, i) = std::conj(avg);
        }
        p(i, i) = cxd{p(i, i).real(), 0.0};
    }
    out.p = p;
    return out;
}

ComplexMatrix abs_matrix(const ComplexMatrix& z) { return polar(z).p; }

bool spec_multiset_equal(ComplexSpectrum a, ComplexSpectrum b, double tol) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, "spectra of different lengths");
    }
    canonical_sort(a);
    canonical_sort(b);
    std::vector<bool> used(b.size(), false);
    for (const cxd& za : a) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(za - b[j]);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        if (best_j == b.size() || best > tol) return false;
        used[best_j] = true;
    }
    return true;
}

} // namespace harnack
