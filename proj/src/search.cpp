#include "harnack/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "harnack/random_matrix.hpp"

namespace harnack {

namespace {

const char* const kKnownInequalities[] = {
    "tung",      "psd",        "general-lower",    "multi",
    "corollary", "conjecture", "conjecture-lower", "conjecture-upper",
};

bool known_inequality(const std::string& name) {
    for (const char* k : kKnownInequalities)
        if (name == k) return true;
    return false;
}

WeightVector sample_weights(WeightKind kind, std::size_t m, RngState& rng) {
    if (kind == WeightKind::Uniform) return WeightVector::uniform(m);
    // flat Dirichlet: normalized i.i.d. exponentials
    std::vector<double> w(m);
    double sum = 0.0;
    for (double& v : w) {
        double u = rng.next_uniform();
        if (u <= 0.0) u = 0x1.0p-53;
        v = -std::log(u);
        sum += v;
    }
    for (double& v : w) v /= sum;
    return WeightVector(std::move(w));
}

} // namespace

const char* matrix_kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::Psd: return "psd";
        case MatrixKind::GeneralContraction: return "general-contraction";
        case MatrixKind::PolarShifted: return "polar-shifted";
    }
    return "psd";
}

MatrixKind matrix_kind_from_name(const std::string& name) {
    if (name == "psd") return MatrixKind::Psd;
    if (name == "general-contraction") return MatrixKind::GeneralContraction;
    if (name == "polar-shifted") return MatrixKind::PolarShifted;
    throw Error(ErrorKind::ParseError, "unknown matrix kind: " + name);
}

const char* weight_kind_name(WeightKind k) {
    return k == WeightKind::Uniform ? "uniform" : "dirichlet-flat";
}

WeightKind weight_kind_from_name(const std::string& name) {
    if (name == "uniform") return WeightKind::Uniform;
    if (name == "dirichlet-flat") return WeightKind::DirichletFlat;
    throw Error(ErrorKind::ParseError, "unknown weight kind: " + name);
}

void SearchConfig::validate() const {
    if (!known_inequality(inequality)) {
        throw Error(ErrorKind::UnknownInequality, "no inequality named '" + inequality + "'");
    }
    if (trials < 1) throw Error(ErrorKind::BadRange, "trials must be >= 1");
    if (n < 1 || n > ComplexMatrix::kMaxOrder) throw Error(ErrorKind::BadRange, "n out of range");
    if (m < 1) throw Error(ErrorKind::BadRange, "m must be >= 1");
    if (!(eig_lo >= 0.0 && eig_lo <= eig_hi && eig_hi < 1.0)) {
        throw Error(ErrorKind::BadRange, "eigenvalue range must satisfy 0 <= lo <= hi < 1");
    }
}

RngState derive_trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
    return RngState(seed, trial_index);
}

std::pair<EnsembleSpec, ComplexMatrix> sample_instance(const SearchConfig& cfg, RngState& rng) {
    std::vector<ComplexMatrix> mats;
    mats.reserve(cfg.m);
    switch (cfg.matrix_kind) {
        case MatrixKind::Psd:
            for (std::size_t i = 0; i < cfg.m; ++i) {
                mats.push_back(random_psd_contraction(cfg.n, rng, cfg.eig_lo, cfg.eig_hi));
            }
            break;
        case MatrixKind::GeneralContraction:
            for (std::size_t i = 0; i < cfg.m; ++i) {
                mats.push_back(random_with_singular_values(cfg.n, rng, cfg.eig_lo, cfg.eig_hi));
            }
            break;
        case MatrixKind::PolarShifted: {
            // per-matrix scale draw makes very unequal ensembles common,
            // which is where the lower-bound violations live
            for (std::size_t i = 0; i < cfg.m; ++i) {
                const double scale = rng.next_uniform();
                const double hi = cfg.eig_lo + scale * (cfg.eig_hi - cfg.eig_lo);
                mats.push_back(random_psd_contraction(cfg.n, rng, cfg.eig_lo, hi));
            }
            const ComplexMatrix u0 = haar_unitary(cfg.n, rng);
            for (ComplexMatrix& z : mats) z = u0 * z;  // Z -> U0 |Z|, |Z| = Z for PSD Z
            break;
        }
    }
    const ComplexMatrix u = haar_unitary(cfg.n, rng);
    WeightVector w = sample_weights(cfg.weight_kind, cfg.m, rng);
    return {EnsembleSpec(std::move(mats), std::move(w)), u};
}

InequalityReport evaluate_inequality(const std::string& name, const EnsembleSpec& ens,
                                     const ComplexMatrix& u) {
    if (name == "tung") return verify_tung(ens.matrices.front(), u);
    if (name == "psd") return verify_psd(ens.matrices.front(), u);
    if (name == "general-lower") return verify_general_lower(ens.matrices.front(), u);
    if (name == "multi") return verify_multi(ens, u);
    if (name == "corollary") return verify_corollary(ens.matrices, ens.weights, u);
    if (name == "conjecture" || name == "conjecture-lower" || name == "conjecture-upper") {
        return conjecture_eval(ens.matrices, ens.weights);
    }
    throw Error(ErrorKind::UnknownInequality, "no inequality named '" + name + "'");
}

double relevant_slack(const std::string& name, const InequalityReport& rep) {
    if (name == "conjecture-lower") return rep.slack_lower;
    if (name == "conjecture-upper") return rep.slack_upper;
    return rep.min_slack();
}

bool is_violation(const std::string& name, const InequalityReport& rep) {
    if (name == "conjecture-lower") return !rep.holds_lower;
    if (name == "conjecture-upper") return !rep.holds_upper;
    return !rep.holds_lower || !rep.holds_upper;
}

SearchOutcome run_search(const SearchConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    struct TrialResult {
        InequalityReport report;
        json inputs;
        double slack = 0.0;
        bool violation = false;
    };
    std::vector<TrialResult> results(cfg.trials);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            RngState rng = derive_trial_rng(cfg.seed, t);
            auto [ens, u] = sample_instance(cfg, rng);
            TrialResult& r = results[t];
            r.report = evaluate_inequality(cfg.inequality, ens, u);
            json mats = json::array();
            for (const ComplexMatrix& z : ens.matrices) mats.push_back(matrix_to_json(z));
            r.inputs = json{{"matrices", std::move(mats)},
                            {"weights", ens.weights.values()},
                            {"unitary", matrix_to_json(u)}};
            r.slack = relevant_slack(cfg.inequality, r.report);
            r.violation = is_violation(cfg.inequality, r.report);
        }
    };

    const unsigned threads = std::max(1u, cfg.threads);
    if (threads == 1 || cfg.trials < 2) {
        run_range(0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (cfg.trials + threads - 1) / threads;
        for (unsigned k = 0; k < threads; ++k) {
            const std::size_t begin = std::min<std::size_t>(k * chunk, cfg.trials);
            const std::size_t end = std::min<std::size_t>(begin + chunk, cfg.trials);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }

    SearchOutcome out;
    out.config = cfg;
    out.trials_run = cfg.trials;
    out.min_slack = std::numeric_limits<double>::infinity();
    double slack_sum = 0.0;
    std::vector<std::size_t> order(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        order[t] = t;
        out.min_slack = std::min(out.min_slack, results[t].slack);
        slack_sum += results[t].slack;
        if (results[t].violation) {
            out.violations.push_back({t, results[t].report, results[t].inputs});
        }
    }
    out.mean_slack = slack_sum / static_cast<double>(cfg.trials);

    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return results[a].slack < results[b].slack; });
    const std::size_t keep = std::min(cfg.top_k, cfg.trials);
    out.tightest.reserve(keep);
    for (std::size_t k = 0; k < keep; ++k) {
        const std::size_t t = order[k];
        out.tightest.push_back({t, results[t].report, results[t].inputs});
    }

    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

json config_to_json(const SearchConfig& cfg) {
    return json{
        {"inequality", cfg.inequality},
        {"n", cfg.n},
        {"m", cfg.m},
        {"trials", cfg.trials},
        {"seed", cfg.seed},
        {"eig_lo", cfg.eig_lo},
        {"eig_hi", cfg.eig_hi},
        {"matrix_kind", matrix_kind_name(cfg.matrix_kind)},
        {"weight_kind", weight_kind_name(cfg.weight_kind)},
        {"top_k", cfg.top_k},
    };
}

json outcome_to_json(const SearchOutcome& outcome) {
    auto record_to_json = [](const TrialRecord& r) {
        return json{{"trial", r.trial_index},
                    {"report", report_to_json(r.report)},
                    {"inputs", r.inputs}};
    };
    json violations = json::array();
    for (const TrialRecord& r : outcome.violations) violations.push_back(record_to_json(r));
    json tightest = json::array();
    for (const TrialRecord& r : outcome.tightest) tightest.push_back(record_to_json(r));

    double mean = outcome.mean_slack;
    json mean_j = std::isinf(mean) ? json(mean > 0 ? "INF" : "-INF") : json(mean);
    json min_j = std::isinf(outcome.min_slack)
                     ? json(outcome.min_slack > 0 ? "INF" : "-INF")
                     : json(outcome.min_slack);
    return json{
        {"config", config_to_json(outcome.config)},
        {"trials_run", outcome.trials_run},
        {"min_slack", std::move(min_j)},
        {"mean_slack", std::move(mean_j)},
        {"violations", std::move(violations)},
        {"tightest", std::move(tightest)},
    };
}

} // namespace harnack
