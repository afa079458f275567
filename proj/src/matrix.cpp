#include "harnack/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace harnack {

namespace {

void check_order(std::size_t n) {
    if (n < 1 || n > ComplexMatrix::kMaxOrder) {
        throw Error(ErrorKind::BadRange,
                    "matrix order must be in [1, " + std::to_string(ComplexMatrix::kMaxOrder) +
                        "], got " + std::to_string(n));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), entries_(n * n, cxd{0.0, 0.0}) {
    check_order(n);
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<cxd> entries)
    : n_(n), entries_(std::move(entries)) {
    check_order(n);
    if (entries_.size() != n * n) {
        throw Error(ErrorKind::BadRange, "entry count does not match order");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cxd>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal_real(const std::vector<double>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cxd ComplexMatrix::trace() const {
    cxd t{0.0, 0.0};
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cxd& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double ComplexMatrix::frobenius() const {
    double s = 0.0;
    for (const cxd& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const cxd& e) {
        return std::isfinite(e.real()) && std::isfinite(e.imag());
    });
}

void ComplexMatrix::require_finite(const char* context) const {
    if (!all_finite()) {
        throw Error(ErrorKind::BadDomain, std::string(context) + ": non-finite matrix entry");
    }
}

double ComplexMatrix::hermitian_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermitian_defect() <= tol; }

double ComplexMatrix::unitary_defect() const {
    const ComplexMatrix g = adjoint() * (*this);
    double d = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            d = std::max(d, std::abs(g(i, j) - (i == j ? cxd{1.0, 0.0} : cxd{0.0, 0.0})));
    return d;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.n_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = a.entries_[k] + b.entries_[k];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.n_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = a.entries_[k] - b.entries_[k];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.n_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cxd aik = a(i, k);
            if (aik == cxd{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix operator*(cxd s, const ComplexMatrix& a) {
    ComplexMatrix r(a.n_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = s * a.entries_[k];
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return cxd{s, 0.0} * a; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

} // namespace harnack
