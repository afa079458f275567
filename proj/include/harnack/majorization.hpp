#ifndef HARNACK_MAJORIZATION_HPP
#define HARNACK_MAJORIZATION_HPP

#include <optional>
#include <vector>

#include "harnack/linalg.hpp"
#include "harnack/matrix.hpp"

namespace harnack {

/// Positive weights summing to one (within 1e-12).
class WeightVector {
public:
    explicit WeightVector(std::vector<double> w);

    static WeightVector uniform(std::size_t m);

    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }
    const std::vector<double>& values() const { return w_; }

private:
    std::vector<double> w_;
};

struct MajorizationVerdict {
    bool holds = false;
    std::optional<std::size_t> failing_prefix;  // 1-based prefix length
    double slack = 0.0;                         // minimum prefix gap
};

/// Additive majorization x < y: descending prefix sums of x below those of y,
/// totals equal unless weak. Both arguments are sorted internally.
MajorizationVerdict majorizes_add(Spectrum x, Spectrum y, bool weak);

/// Multiplicative (log) majorization via raw prefix products, so zero entries
/// need no special casing. Entries must be nonnegative.
MajorizationVerdict majorizes_log(Spectrum x, Spectrum y, bool weak);

struct LemmaReport {
    double lhs = 0.0;  // product over x side
    double rhs = 0.0;  // product over y side
    bool strict_holds = false;
    MajorizationVerdict weak_log;  // only populated by lemma_shift
};

/// Shift lemma: x <_log y and y not a permutation of x imply
/// (1+x) weakly log-majorized by (1+y) and prod(1+x_k) < prod(1+y_k).
/// Throws HypothesisFailed when the preconditions do not hold.
LemmaReport lemma_shift(Spectrum x, Spectrum y);

/// Reverse form on [0,1): prod(1-x_k) > prod(1-y_k) under the same hypotheses.
LemmaReport lemma_reverse(Spectrum x, Spectrum y);

struct LewentResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool equality = false;
};

/// (1 + sum a_i x_i) / (1 - sum a_i x_i) <= prod ((1+x_i)/(1-x_i))^{a_i}
/// for x_i in [0,1); equality iff all x_i coincide.
LewentResult lewent(const std::vector<double>& x, const WeightVector& alpha);

/// Fan: lambda(h+s) majorized by lambda(h) + lambda(s) for Hermitian h, s.
MajorizationVerdict fan_check(const ComplexMatrix& h, const ComplexMatrix& s);

/// Weyl: |lambda(a)| log-majorized by sigma(a), with equal total products.
MajorizationVerdict weyl_check(const ComplexMatrix& a);

} // namespace harnack

#endif
