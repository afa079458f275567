#include "harnack/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace harnack {

namespace {

constexpr double kHoldTol = 1e-9;        // relative tolerance on bound checks
constexpr double kSpecMatchTol = 1e-7;   // equality-case spectrum matching
constexpr double kUMatchTol = 1e-8;      // U = +-I detection
constexpr double kEigOneTol = 1e-9;
constexpr double kDenFloor = 1e-300;

void require_unitary(const ComplexMatrix& u) {
    if (u.unitary_defect() > 1e-8) {
        throw Error(ErrorKind::NotUnitary, "matrix is not unitary within 1e-8");
    }
}

double real_determinant_of_hermitian_expression(const ComplexMatrix& m, const char* what) {
    const cxd d = det_lu(m);
    if (std::abs(d.imag()) > 1e-9 * (1.0 + std::abs(d.real()))) {
        throw Error(ErrorKind::BadDomain,
                    std::string(what) + ": determinant has unexpected imaginary part");
    }
    return d.real();
}

// Eigenvalues of a PSD input, with the PSD precondition enforced.
Spectrum psd_eigenvalues(const ComplexMatrix& z, const char* what) {
    const double scale = 1.0 + z.max_abs();
    if (z.hermitian_defect() > 1e-9 * scale) {
        throw Error(ErrorKind::NotPSD, std::string(what) + ": matrix is not Hermitian");
    }
    Spectrum r = eig_hermitian(z).values;
    if (!r.empty() && r.back() < -1e-9 * scale) {
        throw Error(ErrorKind::NotPSD, std::string(what) + ": negative eigenvalue");
    }
    for (double& v : r) v = std::max(v, 0.0);
    return r;
}

void set_lower_check(InequalityReport& rep) {
    if (rep.mid.is_inf) {
        // infinity satisfies any finite lower bound by convention
        rep.holds_lower = true;
        rep.slack_lower = std::numeric_limits<double>::infinity();
        return;
    }
    rep.slack_lower = rep.mid.value - rep.lower.value;
    const double scale = std::max({1.0, std::abs(rep.lower.value), std::abs(rep.mid.value)});
    rep.holds_lower = rep.slack_lower >= -kHoldTol * scale;
}

void set_upper_check(InequalityReport& rep) {
    if (rep.upper.is_inf) {
        rep.holds_upper = true;
        rep.slack_upper = std::numeric_limits<double>::infinity();
        return;
    }
    if (rep.mid.is_inf) {
        rep.holds_upper = false;
        rep.slack_upper = -std::numeric_limits<double>::infinity();
        return;
    }
    rep.slack_upper = rep.upper.value - rep.mid.value;
    const double scale = std::max({1.0, std::abs(rep.upper.value), std::abs(rep.mid.value)});
    rep.holds_upper = rep.slack_upper >= -kHoldTol * scale;
}

void append_note(InequalityReport& rep, const std::string& note) {
    if (!rep.notes.empty()) rep.notes += "; ";
    rep.notes += note;
}

// Equality-case classification for the PSD restatement: r holds lambda(Z).
std::vector<EqualityFlag> classify_equality(const ComplexMatrix& z, const ComplexMatrix& u,
                                            const Spectrum& r) {
    std::vector<EqualityFlag> flags;
    for (double rk : r) {
        if (std::abs(rk - 1.0) <= kEigOneTol) {
            flags.push_back(EqualityFlag::EigenvalueOne);
            break;
        }
    }
    const ComplexSpectrum lam_uz = eig_general(u * z);
    ComplexSpectrum pos(r.begin(), r.end());
    ComplexSpectrum neg(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) neg[k] = cxd{-r[k], 0.0};
    if (spec_multiset_equal(lam_uz, neg, kSpecMatchTol)) flags.push_back(EqualityFlag::SpecNegMatch);
    if (spec_multiset_equal(lam_uz, pos, kSpecMatchTol)) flags.push_back(EqualityFlag::SpecPosMatch);
    const ComplexMatrix id = ComplexMatrix::identity(u.order());
    if (max_abs_diff(u, id) <= kUMatchTol) flags.push_back(EqualityFlag::UIsIdentity);
    if (max_abs_diff(u, cxd{-1.0, 0.0} * id) <= kUMatchTol) flags.push_back(EqualityFlag::UIsNegIdentity);
    return flags;
}

// Weighted bound products over per-matrix spectra r_i.
std::pair<double, ExtendedReal> weighted_bounds(const std::vector<Spectrum>& rs,
                                                const WeightVector& w) {
    double lower = 1.0;
    double upper = 1.0;
    bool upper_inf = false;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        for (double rk : rs[i]) {
            lower *= std::pow(std::abs(1.0 - rk) / (1.0 + rk), w[i]);
            if (std::abs(1.0 - rk) <= 1e-12) {
                upper_inf = true;
            } else {
                upper *= std::pow((1.0 + rk) / (1.0 - rk), w[i]);
            }
        }
    }
    return {lower, upper_inf ? ExtendedReal::inf() : ExtendedReal::finite(upper)};
}

} // namespace

const char* equality_flag_name(EqualityFlag f) {
    switch (f) {
        case EqualityFlag::EigenvalueOne: return "EigenvalueOne";
        case EqualityFlag::SpecNegMatch: return "SpecNegMatch";
        case EqualityFlag::SpecPosMatch: return "SpecPosMatch";
        case EqualityFlag::AllEnsembleEqual: return "AllEnsembleEqual";
        case EqualityFlag::UIsIdentity: return "UIsIdentity";
        case EqualityFlag::UIsNegIdentity: return "UIsNegIdentity";
    }
    return "None";
}

EqualityFlag equality_flag_from_name(const std::string& name) {
    for (EqualityFlag f :
         {EqualityFlag::EigenvalueOne, EqualityFlag::SpecNegMatch, EqualityFlag::SpecPosMatch,
          EqualityFlag::AllEnsembleEqual, EqualityFlag::UIsIdentity, EqualityFlag::UIsNegIdentity}) {
        if (name == equality_flag_name(f)) return f;
    }
    throw Error(ErrorKind::ParseError, "unknown equality flag: " + name);
}

bool InequalityReport::has_flag(EqualityFlag f) const {
    return std::find(equality.begin(), equality.end(), f) != equality.end();
}

double InequalityReport::min_slack() const { return std::min(slack_lower, slack_upper); }

EnsembleSpec::EnsembleSpec(std::vector<ComplexMatrix> mats, WeightVector w)
    : matrices(std::move(mats)), weights(std::move(w)) {
    if (matrices.empty()) throw Error(ErrorKind::BadRange, "empty ensemble");
    if (matrices.size() != weights.size()) {
        throw Error(ErrorKind::WeightError, "matrix count does not match weight count");
    }
    for (const ComplexMatrix& m : matrices) {
        if (m.order() != matrices.front().order()) {
            throw Error(ErrorKind::BadRange, "ensemble matrices must share one order");
        }
    }
}

std::pair<ExtendedReal, ExtendedReal> harnack_bounds(const Spectrum& r) {
    double lower = 1.0;
    double upper = 1.0;
    bool upper_inf = false;
    for (double rk : r) {
        lower *= std::abs(1.0 - rk) / (1.0 + rk);
        if (std::abs(1.0 - rk) <= 1e-12) {
            upper_inf = true;
        } else {
            upper *= (1.0 + rk) / (1.0 - rk);
        }
    }
    return {ExtendedReal::finite(lower), upper_inf ? ExtendedReal::inf() : ExtendedReal::finite(upper)};
}

ExtendedReal tung_ratio(const ComplexMatrix& z, const ComplexMatrix& u) {
    require_unitary(u);
    const ComplexMatrix id = ComplexMatrix::identity(z.order());
    const double num = real_determinant_of_hermitian_expression(id - z.adjoint() * z, "tung_ratio");
    const double den = std::norm(det_lu(id - u * z));
    if (den <= kDenFloor) return ExtendedReal::inf();
    return ExtendedReal::finite(num / den);
}

InequalityReport verify_tung(const ComplexMatrix& z, const ComplexMatrix& u) {
    require_unitary(u);
    const Spectrum r = svd_values(z);
    if (!r.empty() && r.front() >= 1.0) {
        throw Error(ErrorKind::StrictContractionRequired,
                    "largest singular value is " + std::to_string(r.front()));
    }
    InequalityReport rep;
    rep.name = "tung";
    std::tie(rep.lower, rep.upper) = harnack_bounds(r);
    rep.mid = tung_ratio(z, u);
    set_lower_check(rep);
    set_upper_check(rep);
    rep.equality = classify_equality(z, u, r);
    return rep;
}

InequalityReport verify_marcus(const ComplexMatrix& a) {
    const Spectrum r = svd_values(a);
    InequalityReport rep;
    rep.name = "marcus";
    double lower = 1.0, upper = 1.0;
    for (double rk : r) {
        lower *= 1.0 - rk;
        upper *= 1.0 + rk;
    }
    rep.lower = ExtendedReal::finite(lower);
    rep.upper = ExtendedReal::finite(upper);
    const ComplexMatrix id = ComplexMatrix::identity(a.order());
    rep.mid = ExtendedReal::finite(std::abs(det_lu(id - a)));
    set_upper_check(rep);
    if (!r.empty() && r.front() < 1.0) {
        set_lower_check(rep);
    } else {
        rep.slack_lower = rep.mid.value - lower;
        rep.holds_lower = true;
        append_note(rep, "lower bound not asserted: input is not a strict contraction");
    }
    return rep;
}

InequalityReport verify_general_lower(const ComplexMatrix& z, const ComplexMatrix& u) {
    require_unitary(u);
    const Spectrum r = svd_values(z);
    InequalityReport rep;
    rep.name = "general-lower";
    rep.lower = harnack_bounds(r).first;
    rep.upper = ExtendedReal::inf();
    const ComplexMatrix id = ComplexMatrix::identity(z.order());
    const double num =
        std::abs(real_determinant_of_hermitian_expression(id - z.adjoint() * z, "general-lower"));
    const double den = std::norm(det_lu(id - u * z));
    rep.mid = (den <= kDenFloor) ? ExtendedReal::inf() : ExtendedReal::finite(num / den);
    set_lower_check(rep);
    set_upper_check(rep);
    return rep;
}

InequalityReport verify_psd(const ComplexMatrix& z, const ComplexMatrix& u) {
    require_unitary(u);
    const Spectrum r = psd_eigenvalues(z, "verify_psd");

    const ComplexMatrix id = ComplexMatrix::identity(z.order());
    const double den_root = std::abs(det_lu(id - u * z));
    if (den_root <= 1e-12) {
        throw Error(ErrorKind::SingularHypothesis, "I - UZ is singular within 1e-12");
    }

    InequalityReport rep;
    rep.name = "psd";
    std::tie(rep.lower, rep.upper) = harnack_bounds(r);
    const double num =
        std::abs(real_determinant_of_hermitian_expression(id - z * z, "verify_psd"));
    rep.mid = ExtendedReal::finite(num / (den_root * den_root));
    set_lower_check(rep);
    if (!r.empty() && r.front() < 1.0) {
        set_upper_check(rep);
    } else {
        rep.holds_upper = true;
        rep.slack_upper = std::numeric_limits<double>::infinity();
        append_note(rep, "upper bound not asserted: an eigenvalue reaches 1");
    }
    rep.equality = classify_equality(z, u, r);
    return rep;
}

InequalityReport verify_multi(const EnsembleSpec& ens, const ComplexMatrix& u) {
    require_unitary(u);
    std::vector<Spectrum> rs;
    rs.reserve(ens.count());
    for (const ComplexMatrix& zi : ens.matrices) {
        Spectrum r = psd_eigenvalues(zi, "verify_multi");
        if (!r.empty() && r.front() >= 1.0) {
            throw Error(ErrorKind::StrictContractionRequired,
                        "ensemble member has an eigenvalue >= 1");
        }
        rs.push_back(std::move(r));
    }

    ComplexMatrix w(ens.order());
    for (std::size_t i = 0; i < ens.count(); ++i) w = w + ens.weights[i] * ens.matrices[i];

    InequalityReport rep;
    rep.name = "multi";
    const auto [lower, upper] = weighted_bounds(rs, ens.weights);
    rep.lower = ExtendedReal::finite(lower);
    rep.upper = upper;
    const ComplexMatrix id = ComplexMatrix::identity(ens.order());
    const double num = real_determinant_of_hermitian_expression(id - w * w, "verify_multi");
    const double den = std::norm(det_lu(id - u * w));
    rep.mid = (den <= kDenFloor) ? ExtendedReal::inf() : ExtendedReal::finite(num / den);
    set_lower_check(rep);
    set_upper_check(rep);

    bool all_equal = true;
    for (std::size_t i = 1; i < ens.count(); ++i) {
        if (max_abs_diff(ens.matrices[i], ens.matrices.front()) > 1e-9) {
            all_equal = false;
            break;
        }
    }
    rep.equality = classify_equality(w, u, eig_hermitian(w).values);
    if (all_equal) rep.equality.push_back(EqualityFlag::AllEnsembleEqual);
    return rep;
}

InequalityReport verify_corollary(const std::vector<ComplexMatrix>& zs, const WeightVector& w,
                                  const ComplexMatrix& u) {
    require_unitary(u);
    if (zs.empty() || zs.size() != w.size()) {
        throw Error(ErrorKind::WeightError, "matrix count does not match weight count");
    }
    std::vector<Spectrum> rs;
    rs.reserve(zs.size());
    for (const ComplexMatrix& zi : zs) {
        Spectrum r = svd_values(zi);
        if (!r.empty() && r.front() >= 1.0) {
            throw Error(ErrorKind::StrictContractionRequired, "ensemble member is not a contraction");
        }
        rs.push_back(std::move(r));
    }

    const std::size_t n = zs.front().order();
    const ComplexMatrix id = ComplexMatrix::identity(n);
    ComplexMatrix gram_mix(n);   // sum w_i Z_i* Z_i
    ComplexMatrix abs_mix(n);    // sum w_i |Z_i|
    ComplexMatrix abs_sq_mix(n); // sum w_i |Z_i|^2
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const ComplexMatrix gi = zs[i].adjoint() * zs[i];
        gram_mix = gram_mix + w[i] * gi;
        abs_mix = abs_mix + w[i] * abs_matrix(zs[i]);
        abs_sq_mix = abs_sq_mix + w[i] * gi;
    }

    InequalityReport rep;
    rep.name = "corollary";
    rep.lower = ExtendedReal::finite(0.0);  // the corollary is one-sided
    rep.upper = weighted_bounds(rs, w).second;
    const double num = real_determinant_of_hermitian_expression(id - gram_mix, "verify_corollary");
    const double den = std::norm(det_lu(id - u * abs_mix));
    rep.mid = (den <= kDenFloor) ? ExtendedReal::inf() : ExtendedReal::finite(num / den);
    set_lower_check(rep);
    set_upper_check(rep);

    // operator convexity of the square: (sum w_i |Z_i|)^2 <= sum w_i |Z_i|^2
    const Spectrum defect = eig_hermitian(abs_mix * abs_mix - abs_sq_mix).values;
    if (!defect.empty() && defect.front() > 1e-9) {
        rep.holds_upper = false;
        append_note(rep, "operator-convexity check failed (kernel defect)");
    }
    return rep;
}

InequalityReport conjecture_eval(const std::vector<ComplexMatrix>& zs, const WeightVector& w) {
    if (zs.empty() || zs.size() != w.size()) {
        throw Error(ErrorKind::WeightError, "matrix count does not match weight count");
    }
    std::vector<Spectrum> rs;
    rs.reserve(zs.size());
    for (const ComplexMatrix& zi : zs) {
        Spectrum r = svd_values(zi);
        if (!r.empty() && r.front() >= 1.0) {
            throw Error(ErrorKind::StrictContractionRequired, "ensemble member is not a contraction");
        }
        rs.push_back(std::move(r));
    }

    const std::size_t n = zs.front().order();
    const ComplexMatrix id = ComplexMatrix::identity(n);
    ComplexMatrix gram_mix(n);
    ComplexMatrix mix(n);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        gram_mix = gram_mix + w[i] * (zs[i].adjoint() * zs[i]);
        mix = mix + w[i] * zs[i];
    }

    InequalityReport rep;
    rep.name = "conjecture";
    const auto [lower, upper] = weighted_bounds(rs, w);
    rep.lower = ExtendedReal::finite(lower);
    rep.upper = upper;
    const double num = real_determinant_of_hermitian_expression(id - gram_mix, "conjecture_eval");
    const double den = std::norm(det_lu(id - mix));
    rep.mid = (den <= kDenFloor) ? ExtendedReal::inf() : ExtendedReal::finite(num / den);
    set_lower_check(rep);
    set_upper_check(rep);
    append_note(rep, "lower bound is known false in general; upper bound is an open conjecture; "
                     "violations are findings, not errors");
    return rep;
}

ComplexMatrix counterexample_z1() {
    return ComplexMatrix(2, {cxd{0.34, 0.0}, cxd{-0.15, 0.0}, cxd{-0.15, 0.0}, cxd{0.07, 0.0}});
}

ComplexMatrix counterexample_z2() {
    return ComplexMatrix(2, {cxd{0.02, 0.0}, cxd{-0.01, 0.0}, cxd{-0.01, 0.0}, cxd{0.01, 0.0}});
}

ComplexMatrix counterexample_u() {
    return ComplexMatrix(2, {cxd{-0.60, 0.0}, cxd{0.80, 0.0}, cxd{0.80, 0.0}, cxd{0.60, 0.0}});
}

double round_half_away(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::copysign(std::floor(std::abs(x) * scale + 0.5), x) / scale;
}

InequalityReport paper_counterexample() {
    const std::vector<ComplexMatrix> zs{counterexample_z1(), counterexample_z2()};
    const WeightVector w({0.5, 0.5});
    const ComplexMatrix u = counterexample_u();

    std::vector<Spectrum> rs{eig_hermitian(zs[0]).values, eig_hermitian(zs[1]).values};
    const auto [lower, upper] = weighted_bounds(rs, w);

    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix gram_mix(2), abs_mix(2);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        gram_mix = gram_mix + w[i] * (zs[i].adjoint() * zs[i]);
        abs_mix = abs_mix + w[i] * abs_matrix(zs[i]);
    }
    const double num =
        real_determinant_of_hermitian_expression(id - gram_mix, "paper_counterexample");
    const double den = std::norm(det_lu(id - u * abs_mix));

    InequalityReport rep;
    rep.name = "paper-counterexample";
    rep.lower = ExtendedReal::finite(lower);
    rep.mid = ExtendedReal::finite(num / den);
    rep.upper = upper;
    set_lower_check(rep);
    set_upper_check(rep);
    append_note(rep, "published ensemble: the tempting lower bound fails here");
    return rep;
}

} // namespace harnack
