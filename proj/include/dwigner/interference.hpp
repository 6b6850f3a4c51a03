#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwigner/gauss_int.hpp"
#include "dwigner/quantum_net.hpp"

namespace dwigner {

// The position-dependent factor F(q) of the interference term for
// (a|0> + b|m>), with the derived spread statistics. F is indexed by the
// position tuple q; F_scaled holds the exact Gaussian integer d^2 F(q).
struct InterferenceProfile {
    int n = 0;
    int d = 0;
    tuple_t m = 0;

    std::vector<GaussInt> F_scaled;
    std::vector<std::complex<double>> F;

    double maxR = 0;  // max_q |Re F(q)|
    double maxI = 0;  // max_q |Im F(q)|
    std::optional<double> entropyR, entropyI;
    bool degenerate = false;  // an all-zero R or I distribution

    std::complex<double> at(tuple_t q) const { return F[q]; }
};

// F(q) = (1/d^2) sum_p' f_(m,p') (-1)^(q.p') i^(m.p'), evaluated for all q
// by one Walsh-Hadamard transform of the Gaussian-integer sequence
// g(p') = f_(m,p') i^(m.p').
InterferenceProfile interference_profile(const QuantumNet& net, tuple_t m);

// Direct d-term summation of the same quantity; the independent cross-check
// for the transform path.
std::vector<GaussInt> interference_profile_direct(const QuantumNet& net, tuple_t m);

// 2 Re{a b* (-1)^(m.p) F(q)} over the grid, in field-power order (q-major).
std::vector<double> full_interference_term(const QuantumNet& net, tuple_t m,
                                           std::complex<double> a, std::complex<double> b);

// A net whose profile for this m is supported exactly on {q_I, q_I + m}:
// the sum is made totally constructive at q_I. Unconstrained signs stay +1.
QuantumNet localized_net_for(std::shared_ptr<const RaySystem> sys, tuple_t m, tuple_t q_I);

struct OverlapSearchResult {
    int n = 0;
    std::uint64_t total_assignments = 0;  // 2^(n(d-1)), horizontal gauge-fixed
    std::uint64_t satisfying = 0;
    std::vector<std::uint64_t> per_m_satisfying;  // indexed by m-1
    // For n=2 only: the independent sweep over every full net.
    std::optional<std::uint64_t> full_net_total;
    std::optional<std::uint64_t> full_net_satisfying;
};

// Exhaustive search for sign assignments making F(0) = 0 for every nonzero
// m at once. Both supported cases come back empty.
OverlapSearchResult overlap_search(int n, int threads = 1);

// Randomized probe of the same conditions for larger n, where exhaustion is
// out of reach: samples sign assignments uniformly and reports any that
// satisfy every equation. total_assignments is the sample count here and
// per_m_satisfying stays empty.
OverlapSearchResult overlap_search_randomized(int n, std::uint64_t samples, std::uint64_t seed,
                                              int threads = 1);

// -sum P log_d P of the normalized distribution; nullopt when every value
// is zero. 0 log 0 counts as 0.
std::optional<double> normalized_entropy(std::span<const double> values);

struct ExperimentRecord {
    int n = 0;
    std::uint64_t net_seed = 0;
    tuple_t m = 0;
    double maxR = 0, maxI = 0;
    std::optional<double> entropyR, entropyI;
    bool degenerate = false;
};

struct AggregateRow {
    int n = 0;
    int record_count = 0;
    int degenerate_count = 0;
    // R-statistics feed the reported columns; I-statistics are kept for the
    // R vs I agreement checks.
    double mean_ratio = 0, mean_dev_ratio = 0;
    double mean_entropy = 0, mean_dev_entropy = 0;
    double mean_ratio_i = 0, mean_dev_ratio_i = 0;
    double mean_entropy_i = 0, mean_dev_entropy_i = 0;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;
    std::vector<AggregateRow> aggregates;
};

// For each n, nets_per_n seeded random nets and every nonzero displacement:
// record max|Re F| * d, max|Im F| * d (the interference maxima relative to
// the 1/d line value) and the profile entropies, then aggregate per n.
// Deterministic for a given master seed, independent of the thread count.
ExperimentResult run_average_experiment(int n_min, int n_max, int nets_per_n,
                                        std::uint64_t master_seed, int threads = 1);

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    int point_count = 0;
};

// Ordinary least squares of ln(ratio) against n.
FitResult fit_exponential(const std::vector<std::pair<int, double>>& points);

std::string records_to_csv(const std::vector<ExperimentRecord>& records);
std::string aggregates_to_csv(const std::vector<AggregateRow>& rows);
// Two-column gnuplot-ready data: n vs mean ratio / mean entropy.
std::string decay_plot_data(const std::vector<AggregateRow>& rows);
std::string entropy_plot_data(const std::vector<AggregateRow>& rows);

// Deterministic per-(n, net index) seed stream for the experiment.
std::uint64_t derive_net_seed(std::uint64_t master_seed, int n, int net_index);

// Tuple printed component-first: m = (m_1, ..., m_n) -> "m_1...m_n".
std::string tuple_bits(tuple_t t, int n);

}  // namespace dwigner
