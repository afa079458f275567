#ifndef HARNACK_SEARCH_HPP
#define HARNACK_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "harnack/inequality.hpp"
#include "harnack/json_io.hpp"
#include "harnack/rng.hpp"

namespace harnack {

enum class MatrixKind { Psd, GeneralContraction, PolarShifted };
enum class WeightKind { Uniform, DirichletFlat };

const char* matrix_kind_name(MatrixKind k);
MatrixKind matrix_kind_from_name(const std::string& name);
const char* weight_kind_name(WeightKind k);
WeightKind weight_kind_from_name(const std::string& name);

struct SearchConfig {
    std::string inequality;  // tung, psd, general-lower, multi, corollary,
                             // conjecture, conjecture-lower, conjecture-upper
    std::size_t n = 2;
    std::size_t m = 1;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    double eig_lo = 0.0;
    double eig_hi = 0.9;
    MatrixKind matrix_kind = MatrixKind::Psd;
    WeightKind weight_kind = WeightKind::Uniform;
    std::size_t top_k = 10;
    unsigned threads = 1;  // execution detail; never affects the outcome

    void validate() const;
};

struct TrialRecord {
    std::size_t trial_index = 0;
    InequalityReport report;
    json inputs;  // matrices, weights, unitary: enough to replay the trial
};

struct SearchOutcome {
    SearchConfig config;
    std::size_t trials_run = 0;
    double min_slack = 0.0;
    double mean_slack = 0.0;
    double elapsed_seconds = 0.0;  // excluded from canonical serialization
    std::vector<TrialRecord> violations;
    std::vector<TrialRecord> tightest;
};

/// Per-trial stream: the trial index is the RNG stream id.
RngState derive_trial_rng(std::uint64_t seed, std::uint64_t trial_index);

/// One sampled problem instance: an ensemble of the configured kind plus an
/// independent Haar unitary.
std::pair<EnsembleSpec, ComplexMatrix> sample_instance(const SearchConfig& cfg, RngState& rng);

/// Evaluate the named inequality on an instance. Which slack counts as a
/// violation depends on the name (conjecture-lower checks only that side).
InequalityReport evaluate_inequality(const std::string& name, const EnsembleSpec& ens,
                                     const ComplexMatrix& u);

/// Signed slack the violation check uses for the named inequality.
double relevant_slack(const std::string& name, const InequalityReport& rep);

bool is_violation(const std::string& name, const InequalityReport& rep);

/// Deterministic seeded Monte-Carlo sweep; results are merged by trial index
/// so the thread count never changes the outcome.
SearchOutcome run_search(const SearchConfig& cfg);

/// Canonical serialization (elapsed time goes to diagnostics, not here).
json outcome_to_json(const SearchOutcome& outcome);
json config_to_json(const SearchConfig& cfg);

} // namespace harnack

#endif
