#ifndef HARNACK_INEQUALITY_HPP
#define HARNACK_INEQUALITY_HPP

#include <string>
#include <vector>

#include "harnack/linalg.hpp"
#include "harnack/majorization.hpp"
#include "harnack/matrix.hpp"

namespace harnack {

/// Real value or the symbolic infinity arising from the zero-denominator
/// convention. Kept symbolic so JSON reports stay unambiguous.
struct ExtendedReal {
    double value = 0.0;
    bool is_inf = false;

    static ExtendedReal finite(double v) { return {v, false}; }
    static ExtendedReal inf() { return {0.0, true}; }

    bool operator==(const ExtendedReal&) const = default;
};

enum class EqualityFlag {
    EigenvalueOne,
    SpecNegMatch,
    SpecPosMatch,
    AllEnsembleEqual,
    UIsIdentity,
    UIsNegIdentity,
};

const char* equality_flag_name(EqualityFlag f);
EqualityFlag equality_flag_from_name(const std::string& name);

struct InequalityReport {
    std::string name;
    ExtendedReal lower;
    ExtendedReal mid;
    ExtendedReal upper;
    bool holds_lower = true;
    bool holds_upper = true;
    double slack_lower = 0.0;  // mid - lower; negative beyond tolerance means violation
    double slack_upper = 0.0;  // upper - mid
    std::vector<EqualityFlag> equality;
    std::string notes;

    bool has_flag(EqualityFlag f) const;
    double min_slack() const;
    bool operator==(const InequalityReport&) const = default;
};

struct EnsembleSpec {
    std::vector<ComplexMatrix> matrices;
    WeightVector weights;

    EnsembleSpec(std::vector<ComplexMatrix> mats, WeightVector w);
    std::size_t count() const { return matrices.size(); }
    std::size_t order() const { return matrices.front().order(); }
};

/// Two-sided bound products over singular values: lower = prod |1-r|/(1+r),
/// upper = prod (1+r)/(1-r), INF when some r equals 1 within 1e-12.
std::pair<ExtendedReal, ExtendedReal> harnack_bounds(const Spectrum& r);

/// det(I - Z*Z) / |det(I - U Z)|^2 as an extended real.
ExtendedReal tung_ratio(const ComplexMatrix& z, const ComplexMatrix& u);

/// Two-sided bound for a strict contraction z and unitary u.
InequalityReport verify_tung(const ComplexMatrix& z, const ComplexMatrix& u);

/// prod(1-r) <= |det(I-A)| <= prod(1+r); the upper bound holds for every
/// square A, the lower only for strict contractions (skipped otherwise).
InequalityReport verify_marcus(const ComplexMatrix& a);

/// Lower bound prod |1-r|/(1+r) <= |det(I-Z*Z)| / |det(I-UZ)|^2, valid for
/// arbitrary Z with the zero-denominator-is-infinity convention.
InequalityReport verify_general_lower(const ComplexMatrix& z, const ComplexMatrix& u);

/// PSD restatement with equality classification. Requires I-UZ nonsingular.
InequalityReport verify_psd(const ComplexMatrix& z, const ComplexMatrix& u);

/// Multi-matrix extension for PSD strict contractions with convex weights.
InequalityReport verify_multi(const EnsembleSpec& ens, const ComplexMatrix& u);

/// Upper bound through the matrix absolute values; also checks operator
/// convexity of the square on the sampled ensemble.
InequalityReport verify_corollary(const std::vector<ComplexMatrix>& zs, const WeightVector& w,
                                  const ComplexMatrix& u);

/// Open two-sided guess for general contractions; violations are reported as
/// findings, never raised.
InequalityReport conjecture_eval(const std::vector<ComplexMatrix>& zs, const WeightVector& w);

/// The published 2x2 ensemble disproving the tempting lower bound.
InequalityReport paper_counterexample();

/// Fixed matrices of the published counterexample.
ComplexMatrix counterexample_z1();
ComplexMatrix counterexample_z2();
ComplexMatrix counterexample_u();

/// Round half away from zero to the given number of decimals.
double round_half_away(double x, int decimals);

} // namespace harnack

#endif
