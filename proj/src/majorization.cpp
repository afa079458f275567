#include "harnack/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace harnack {

namespace {

void sort_descending(Spectrum& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

void require_same_length(const Spectrum& x, const Spectrum& y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::LengthMismatch, "vectors of different lengths");
    }
}

bool is_permutation_of(const Spectrum& x, const Spectrum& y, double tol) {
    ComplexSpectrum a(x.begin(), x.end()), b(y.begin(), y.end());
    return spec_multiset_equal(std::move(a), std::move(b), tol);
}

void check_lemma_hypotheses(const Spectrum& x, const Spectrum& y) {
    require_same_length(x, y);
    for (double v : x)
        if (v < 0.0) throw Error(ErrorKind::HypothesisFailed, "x has a negative entry");
    for (double v : y)
        if (v < 0.0) throw Error(ErrorKind::HypothesisFailed, "y has a negative entry");
    if (is_permutation_of(x, y, 1e-12)) {
        throw Error(ErrorKind::HypothesisFailed, "y is a permutation of x");
    }
    if (!majorizes_log(x, y, false).holds) {
        throw Error(ErrorKind::HypothesisFailed, "x is not log-majorized by y");
    }
}

double product_shifted(const Spectrum& v, double shift) {
    double p = 1.0;
    for (double e : v) p *= shift + e;
    return p;
}

} // namespace

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw Error(ErrorKind::WeightError, "empty weight vector");
    double sum = 0.0;
    for (double v : w_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw Error(ErrorKind::WeightError, "weights must be positive and finite");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw Error(ErrorKind::WeightError, "weights must sum to 1 within 1e-12");
    }
    for (double& v : w_) v /= sum;
}

WeightVector WeightVector::uniform(std::size_t m) {
    return WeightVector(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

MajorizationVerdict majorizes_add(Spectrum x, Spectrum y, bool weak) {
    require_same_length(x, y);
    sort_descending(x);
    sort_descending(y);
    double abs_sum = 0.0;
    for (double v : y) abs_sum += std::abs(v);
    const double tol = 1e-10 * (1.0 + abs_sum);

    MajorizationVerdict out;
    out.holds = true;
    out.slack = std::numeric_limits<double>::infinity();
    double sx = 0.0, sy = 0.0;
    for (std::size_t l = 0; l < x.size(); ++l) {
        sx += x[l];
        sy += y[l];
        const double gap = sy - sx;
        out.slack = std::min(out.slack, gap);
        if (gap < -tol && out.holds) {
            out.holds = false;
            out.failing_prefix = l + 1;
        }
    }
    if (!weak && out.holds && std::abs(sy - sx) > tol) {
        out.holds = false;
        out.failing_prefix = x.size();
    }
    return out;
}

MajorizationVerdict majorizes_log(Spectrum x, Spectrum y, bool weak) {
    require_same_length(x, y);
    for (double v : x)
        if (v < 0.0) throw Error(ErrorKind::BadDomain, "log-majorization needs nonnegative entries");
    for (double v : y)
        if (v < 0.0) throw Error(ErrorKind::BadDomain, "log-majorization needs nonnegative entries");
    sort_descending(x);
    sort_descending(y);

    MajorizationVerdict out;
    out.holds = true;
    out.slack = std::numeric_limits<double>::infinity();
    double px = 1.0, py = 1.0;
    for (std::size_t l = 0; l < x.size(); ++l) {
        px *= x[l];
        py *= y[l];
        const double tol = 1e-10 * (1.0 + std::abs(py));
        const double gap = py - px;
        out.slack = std::min(out.slack, gap);
        if (gap < -tol && out.holds) {
            out.holds = false;
            out.failing_prefix = l + 1;
        }
    }
    const double total_tol = 1e-10 * (1.0 + std::abs(py));
    if (!weak && out.holds && std::abs(py - px) > total_tol) {
        out.holds = false;
        out.failing_prefix = x.size();
    }
    return out;
}

LemmaReport lemma_shift(Spectrum x, Spectrum y) {
    check_lemma_hypotheses(x, y);
    LemmaReport r;
    r.lhs = product_shifted(x, 1.0);
    r.rhs = product_shifted(y, 1.0);
    Spectrum xs(x), ys(y);
    for (double& v : xs) v += 1.0;
    for (double& v : ys) v += 1.0;
    r.weak_log = majorizes_log(xs, ys, true);
    r.strict_holds = r.lhs < r.rhs;
    return r;
}

LemmaReport lemma_reverse(Spectrum x, Spectrum y) {
    check_lemma_hypotheses(x, y);
    for (double v : x)
        if (v >= 1.0) throw Error(ErrorKind::HypothesisFailed, "x entry outside [0,1)");
    for (double v : y)
        if (v >= 1.0) throw Error(ErrorKind::HypothesisFailed, "y entry outside [0,1)");
    LemmaReport r;
    double px = 1.0, py = 1.0;
    for (double v : x) px *= 1.0 - v;
    for (double v : y) py *= 1.0 - v;
    r.lhs = px;
    r.rhs = py;
    r.strict_holds = px > py;
    return r;
}

LewentResult lewent(const std::vector<double>& x, const WeightVector& alpha) {
    if (x.size() != alpha.size()) {
        throw Error(ErrorKind::LengthMismatch, "lewent: x and alpha lengths differ");
    }
    for (double v : x) {
        if (!(v >= 0.0 && v < 1.0)) {
            throw Error(ErrorKind::BadDomain, "lewent: x entries must lie in [0,1)");
        }
    }
    double s = 0.0;
    double rhs = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += alpha[i] * x[i];
        rhs *= std::pow((1.0 + x[i]) / (1.0 - x[i]), alpha[i]);
    }
    LewentResult out;
    out.lhs = (1.0 + s) / (1.0 - s);
    out.rhs = rhs;
    if (out.lhs > out.rhs + 1e-12 * out.rhs) {
        throw Error(ErrorKind::BadDomain, "lewent: inequality violated (kernel defect)");
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    out.equality = (*hi - *lo) <= 1e-10;
    return out;
}

MajorizationVerdict fan_check(const ComplexMatrix& h, const ComplexMatrix& s) {
    const double tol_h = 1e-10 * (1.0 + h.max_abs());
    const double tol_s = 1e-10 * (1.0 + s.max_abs());
    if (!h.is_hermitian(tol_h) || !s.is_hermitian(tol_s)) {
        throw Error(ErrorKind::NotHermitian, "fan_check needs Hermitian inputs");
    }
    const Spectrum sum_spec = eig_hermitian(h + s).values;
    const Spectrum lh = eig_hermitian(h).values;
    const Spectrum ls = eig_hermitian(s).values;
    Spectrum bound(lh.size());
    for (std::size_t k = 0; k < lh.size(); ++k) bound[k] = lh[k] + ls[k];
    return majorizes_add(sum_spec, bound, false);
}

MajorizationVerdict weyl_check(const ComplexMatrix& a) {
    const ComplexSpectrum eigs = eig_general(a);
    Spectrum abs_eigs(eigs.size());
    for (std::size_t k = 0; k < eigs.size(); ++k) abs_eigs[k] = std::abs(eigs[k]);
    return majorizes_log(abs_eigs, svd_values(a), false);
}

} // namespace harnack
