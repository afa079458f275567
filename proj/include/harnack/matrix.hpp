#ifndef HARNACK_MATRIX_HPP
#define HARNACK_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "harnack/errors.hpp"

namespace harnack {

using cxd = std::complex<double>;

/// Dense square complex matrix, row-major, order capped at kMaxOrder.
class ComplexMatrix {
public:
    static constexpr std::size_t kMaxOrder = 64;

    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n);
    ComplexMatrix(std::size_t n, std::vector<cxd> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<cxd>& d);
    static ComplexMatrix diagonal_real(const std::vector<double>& d);

    std::size_t order() const { return n_; }

    cxd& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    const std::vector<cxd>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    cxd trace() const;

    double max_abs() const;       // max |a_ij|
    double frobenius() const;

    bool all_finite() const;
    // throws ParseError-free Error(BadDomain) when a non-finite entry is present
    void require_finite(const char* context) const;

    double hermitian_defect() const;  // max |a_ij - conj(a_ji)|
    bool is_hermitian(double tol) const;
    double unitary_defect() const;    // max-norm of A*A - I

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cxd s, const ComplexMatrix& a);
    friend ComplexMatrix operator*(double s, const ComplexMatrix& a);

private:
    std::size_t n_ = 0;
    std::vector<cxd> entries_;
};

/// Max-norm distance between equal-order matrices.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace harnack

#endif
