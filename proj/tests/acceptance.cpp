// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. --extended adds the optional n=10 sweep to the trend criterion.
#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "dwigner/code5.hpp"
#include "dwigner/interference.hpp"
#include "dwigner/wigner.hpp"

using namespace dwigner;

namespace {

int g_failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string name, double budget_seconds = 0)
        : number_(number), name_(std::move(name)), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& why) {
        ok_ = false;
        if (!why.empty() && details_.empty()) details_ = why;
    }
    void check(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }

    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (budget_ > 0 && secs > budget_) {
            ok_ = false;
            if (details_.empty()) details_ = "time budget exceeded";
        }
        std::printf("%s  %2d. %-52s (%.1fs)%s%s\n", ok_ ? "PASS" : "FAIL", number_, name_.c_str(),
                    secs, details_.empty() ? "" : " -- ", details_.c_str());
        std::fflush(stdout);
        if (!ok_) ++g_failures;
    }

  private:
    int number_;
    std::string name_;
    double budget_;
    bool ok_ = true;
    std::string details_;
    std::chrono::steady_clock::time_point start_;
};

QuantumState random_pure_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    StateAmplitudes psi(1 << n);
    for (int i = 0; i < psi.size(); ++i) psi(i) = {gauss(rng), gauss(rng)};
    psi.normalize();
    return QuantumState::from_vector(psi);
}

double trace_of_product(const DenseOperator& a, const DenseOperator& b) {
    std::complex<double> acc = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, i);
    return acc.real();
}

void criterion_geometry() {
    Criterion c(1, "geometry: partitions and single intersections, n=1..6", 10);
    for (int n = 1; n <= 6; ++n) {
        PhaseSpaceGeometry geom((FieldSpec::with_default_poly(n)));
        int d = geom.d();
        c.check(geom.striation_count() == d + 1, "striation count");

        for (int s = 0; s < geom.striation_count(); ++s) {
            std::vector<int> owner(static_cast<std::size_t>(d) * d, -1);
            for (int i = 0; i < d; ++i) {
                auto pts = geom.points_of_line({Striation::from_index(s), geom.spec().element_at(i)});
                c.check(static_cast<int>(pts.size()) == d, "line size");
                for (const PhasePoint& pt : pts) {
                    std::size_t idx =
                        static_cast<std::size_t>(geom.spec().order_index_of(pt.q)) * d +
                        geom.spec().order_index_of(pt.p);
                    c.check(owner[idx] == -1, "striation covers a point twice");
                    owner[idx] = i;
                }
            }
            for (int o : owner) c.check(o != -1, "striation misses a point");
        }

        for (int s1 = 0; s1 < geom.striation_count(); ++s1)
            for (int s2 = s1 + 1; s2 < geom.striation_count(); ++s2) {
                std::vector<int> meet(static_cast<std::size_t>(d) * d, 0);
                for (const PhasePoint& pt : geom.all_points()) {
                    Line l1 = geom.line_in_striation_through(Striation::from_index(s1), pt);
                    Line l2 = geom.line_in_striation_through(Striation::from_index(s2), pt);
                    ++meet[static_cast<std::size_t>(geom.spec().order_index_of(l1.intercept)) * d +
                           geom.spec().order_index_of(l2.intercept)];
                }
                for (int m : meet) c.check(m == 1, "cross-striation lines must meet exactly once");
            }
    }
}

void criterion_mub() {
    Criterion c(2, "MUB: cross-basis overlaps 1/d within 1e-10, n<=4", 30);
    for (int n = 1; n <= 4; ++n) {
        auto sys = RaySystem::make_standard(n);
        int d = sys->d();
        for (int trial = 0; trial < 10; ++trial) {
            QuantumNet net = random_net(sys, 1000 * n + trial);
            auto bases = mub_bases(net);
            for (std::size_t s1 = 0; s1 < bases.size(); ++s1)
                for (std::size_t s2 = s1; s2 < bases.size(); ++s2)
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j) {
                            double overlap = trace_of_product(bases[s1][i], bases[s2][j]);
                            double expect =
                                s1 == s2 ? (i == j ? 1.0 : 0.0) : 1.0 / d;
                            if (std::abs(overlap - expect) > 1e-10)
                                c.fail("overlap deviates at n=" + std::to_string(n));
                        }
        }
    }
}

void criterion_wigner_axioms() {
    Criterion c(3, "Wigner axioms: line sums, products, covariance, A(a)", 120);
    std::mt19937_64 rng(2718);
    for (int n = 1; n <= 4; ++n) {
        auto sys = RaySystem::make_standard(n);
        const PhaseSpaceGeometry& geom = sys->geometry();
        int d = sys->d();
        for (int trial = 0; trial < 10; ++trial) {
            QuantumNet net = random_net(sys, 5000 * n + trial);

            std::vector<Line> lines = geom.all_lines();
            std::vector<DenseOperator> projectors;
            for (const Line& l : lines) projectors.push_back(line_projector(net, l));

            std::vector<QuantumState> states;
            std::vector<WignerTable> tables;
            for (int s = 0; s < 10; ++s) {
                states.push_back(random_pure_state(n, rng()));
                tables.push_back(wigner_of_state(net, states.back()));
            }

            for (int s = 0; s < 10; ++s) {
                DenseOperator rho = states[s].density();
                for (std::size_t li = 0; li < lines.size(); ++li) {
                    double prob = trace_of_product(projectors[li], rho);
                    if (std::abs(line_sum(tables[s], geom, lines[li]) - prob) > 1e-10)
                        c.fail("line-sum rule at n=" + std::to_string(n));
                }
                for (int s2 = s; s2 < 10; ++s2) {
                    double dense = trace_of_product(states[s].density(), states[s2].density());
                    if (std::abs(table_inner_product(tables[s], tables[s2]) - dense) > 1e-10)
                        c.fail("inner-product rule at n=" + std::to_string(n));
                }
                PhasePoint delta{sys->spec().element_at(static_cast<int>(rng() % d)),
                                 sys->spec().element_at(static_cast<int>(rng() % d))};
                if (covariance_check(net, states[s], delta) > 1e-10)
                    c.fail("translation covariance at n=" + std::to_string(n));
            }

            // both point-operator constructions, with the projectors cached
            for (const PhasePoint& alpha : geom.all_points()) {
                DenseOperator a8 = point_operator(net, alpha);
                DenseOperator a5 = DenseOperator::Zero(d, d);
                for (int s = 0; s < geom.striation_count(); ++s) {
                    Line l = geom.line_in_striation_through(Striation::from_index(s), alpha);
                    a5 += projectors[static_cast<std::size_t>(s) * d +
                                     sys->spec().order_index_of(l.intercept)];
                }
                a5 = (a5 - DenseOperator::Identity(d, d)) / static_cast<double>(d);
                if ((a8 - a5).cwiseAbs().maxCoeff() > 1e-10)
                    c.fail("point-operator constructions disagree at n=" + std::to_string(n));
            }
        }
    }
}

void criterion_bell() {
    Criterion c(4, "Bell dichotomy: exactly two table forms over 1024 nets", 5);
    auto sys = RaySystem::make_standard(2);
    const FieldSpec& spec = sys->spec();
    NetEnumerator en(sys);

    // The Bell state is stabilized by XX and ZZ, so every table must be
    // invariant under the two displacements (m,0) and (0,m); the four
    // nonzero (resp. negative) cells then form one orbit of that group --
    // the corner picture vs the centre picture of the two figures.
    FieldElement mq = sys->cmap().q_elem(0b11);
    FieldElement mp = sys->cmap().p_elem(0b11);
    auto shifted = [&](const WignerTable& w, FieldElement dq, FieldElement dp, int qi, int pi) {
        int q2 = spec.order_index_of(spec.add(spec.element_at(qi), dq));
        int p2 = spec.order_index_of(spec.add(spec.element_at(pi), dp));
        return w.num_at(q2, p2);
    };

    int corners = 0, centers = 0;
    for (std::uint64_t i = 0; i < en.count(); ++i) {
        WignerTable w = wigner_of_two_term(en.at(i), 0b11, 0);
        std::map<std::int64_t, int> counts;
        for (std::int64_t v : w.num) ++counts[v];

        for (int qi = 0; qi < 4; ++qi)
            for (int pi = 0; pi < 4; ++pi) {
                if (w.num_at(qi, pi) != shifted(w, mq, kZero, qi, pi))
                    c.fail("table not invariant under the XX displacement");
                if (w.num_at(qi, pi) != shifted(w, kZero, mp, qi, pi))
                    c.fail("table not invariant under the ZZ displacement");
            }

        if (counts == std::map<std::int64_t, int>{{0, 12}, {8, 4}}) {
            ++corners;  // interference sits on the interfering lines
        } else if (counts == std::map<std::int64_t, int>{{-4, 4}, {4, 12}}) {
            ++centers;  // negativity between them, one orbit of four cells
        } else {
            c.fail("unexpected Bell multiset");
        }
    }
    c.check(corners + centers == 1024, "pattern counts");
    c.check(corners > 0 && centers > 0, "both patterns must occur");
}

void criterion_overlap() {
    Criterion c(5, "overlap impossibility: 0 solutions for n=2 and n=3", 600);
    OverlapSearchResult r2 = overlap_search(2);
    c.check(r2.total_assignments == 64, "n=2 relevant assignment count");
    c.check(r2.satisfying == 0, "n=2 found a satisfying assignment");
    c.check(r2.full_net_total && *r2.full_net_total == 1024, "n=2 full net count");
    c.check(r2.full_net_satisfying && *r2.full_net_satisfying == 0, "n=2 full net search");
    for (std::uint64_t cnt : r2.per_m_satisfying)
        c.check(cnt >= 1, "single-m relaxation must be satisfiable");

    OverlapSearchResult r3 = overlap_search(3, 2);
    c.check(r3.total_assignments == (1ull << 21), "n=3 assignment count");
    c.check(r3.satisfying == 0, "n=3 found a satisfying assignment");
}

void criterion_localizability() {
    Criterion c(6, "per-m localizability: support {q_I, q_I+m}, |F|=1/2d", 120);
    std::mt19937_64 rng(31415);
    for (int n = 1; n <= 8; ++n) {
        auto sys = RaySystem::make_standard(n);
        int d = sys->d();
        for (int trial = 0; trial < 20; ++trial) {
            tuple_t m = 1 + static_cast<tuple_t>(rng() % (d - 1));
            tuple_t q_I = static_cast<tuple_t>(rng() % d);
            QuantumNet net = localized_net_for(sys, m, q_I);
            InterferenceProfile prof = interference_profile(net, m);
            for (tuple_t q = 0; q < static_cast<tuple_t>(d); ++q) {
                if (q == q_I || q == (q_I ^ m)) {
                    if (std::abs(prof.F_scaled[q].re) != d / 2 ||
                        std::abs(prof.F_scaled[q].im) != d / 2)
                        c.fail("support magnitude must be d/2 (= d^2/(2d))");
                } else if (!prof.F_scaled[q].is_zero()) {
                    c.fail("profile leaks outside {q_I, q_I+m}");
                }
            }
        }
    }
}

void criterion_trends(bool extended) {
    Criterion c(7, "average interference: decay, fit, entropy saturation", 900);
    int n_max = extended ? 10 : 8;
    ExperimentResult res = run_average_experiment(2, n_max, 50, 1, 2);

    std::vector<std::pair<int, double>> points;
    for (const AggregateRow& row : res.aggregates) points.push_back({row.n, row.mean_ratio});

    for (std::size_t i = 1; i < points.size(); ++i)
        c.check(points[i].second < points[i - 1].second, "mean ratio must strictly decrease");

    FitResult fit = fit_exponential(points);
    c.check(fit.slope < 0, "fit slope must be negative");
    c.check(fit.r_squared > 0.9, "fit R^2 must exceed 0.9");

    double prev_entropy = 0, prev_step = 2;
    for (const AggregateRow& row : res.aggregates) {
        if (row.n > 2) {
            double step = row.mean_entropy - prev_entropy;
            c.check(step > 0, "mean entropy must increase");
            c.check(step < prev_step, "entropy increments must shrink");
            prev_step = step;
        }
        prev_entropy = row.mean_entropy;
        c.check(row.degenerate_count == 0, "degenerate profiles are unexpected here");

        // R and I statistics agree within their mean deviations
        double tol = row.mean_dev_ratio + row.mean_dev_ratio_i;
        c.check(std::abs(row.mean_ratio - row.mean_ratio_i) <= tol, "R vs I ratio deviates");
        double tol_s = std::max(1e-3, row.mean_dev_entropy + row.mean_dev_entropy_i);
        c.check(std::abs(row.mean_entropy - row.mean_entropy_i) <= tol_s, "R vs I entropy deviates");
    }
    c.check(res.aggregates.back().mean_entropy > 0.8, "final mean entropy must exceed 0.8");
}

void criterion_fwht() {
    Criterion c(8, "FWHT equals direct summation exactly", 120);
    std::mt19937_64 rng(1618);
    for (int n = 1; n <= 6; ++n) {
        auto sys = RaySystem::make_standard(n);
        QuantumNet net = random_net(sys, 400 + n);
        for (tuple_t m = 1; m < static_cast<tuple_t>(sys->d()); ++m) {
            InterferenceProfile prof = interference_profile(net, m);
            std::vector<GaussInt> direct = interference_profile_direct(net, m);
            for (int q = 0; q < sys->d(); ++q)
                if (!(prof.F_scaled[q] == direct[q])) c.fail("mismatch at n=" + std::to_string(n));
        }
    }
    for (int n : {8, 10, 12}) {
        auto sys = RaySystem::make_standard(n);
        QuantumNet net = random_net(sys, 500 + n);
        for (int trial = 0; trial < 100; ++trial) {
            tuple_t m = 1 + static_cast<tuple_t>(rng() % (sys->d() - 1));
            InterferenceProfile prof = interference_profile(net, m);
            std::vector<GaussInt> direct = interference_profile_direct(net, m);
            for (int q = 0; q < sys->d(); ++q)
                if (!(prof.F_scaled[q] == direct[q])) c.fail("mismatch at n=" + std::to_string(n));
        }
    }
}

void criterion_code5() {
    Criterion c(9, "five-qubit code: frame, tables, errors, degeneracy", 120);
    CodeFrame cf = build_code_frame();
    const RaySystem& sys = *cf.rays;
    const FieldSpec& spec = sys.spec();
    constexpr tuple_t kM = 0b11111;

    // (a) frame invariants: S_j fixes |0>_L and flips the sign of |1>_L
    // (the code space proper is stabilized by the products S_j S_k)
    for (const PauliElement& s : cf.stabilizers) {
        if ((apply_pauli(s, cf.logical_zero) - cf.logical_zero).norm() > 1e-12)
            c.fail("stabilizer eigenvalue on |0>_L");
        if ((apply_pauli(s, cf.logical_one) + cf.logical_one).norm() > 1e-12)
            c.fail("stabilizer eigenvalue on |1>_L");
    }
    for (int j = 0; j < 5; ++j) {
        PauliElement sjsk = pauli_mul(cf.stabilizers[j], cf.stabilizers[(j + 1) % 5]);
        if ((apply_pauli(sjsk, cf.logical_one) - cf.logical_one).norm() > 1e-12)
            c.fail("S_j S_k must stabilize |1>_L");
    }
    c.check(cf.logical_z.qbits == kM && cf.logical_z.pbits == 0 && cf.logical_z.phase_exp == 2,
            "S~ must equal -X...X");
    if ((apply_pauli(cf.logical_z, cf.logical_one) + cf.logical_one).norm() > 1e-12)
        c.fail("S~ sign on |1>_L");
    for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) {
            if (symplectic_product(cf.frame.x_gens()[j], cf.frame.z_gens()[k]) != (j == k ? 1 : 0))
                c.fail("commutation pattern");
            if (symplectic_product(cf.frame.x_gens()[j], cf.frame.x_gens()[k]) != 0)
                c.fail("X' generators must commute");
        }

    tuple_t p_I = 0b00001;
    QuantumNet net = code_net_for(p_I, cf);

    // (b) the logical zero is the horizontal ray
    WignerTable w0 = wigner_of_state(net, QuantumState::from_vector(cf.logical_zero));
    for (int qi = 0; qi < 32; ++qi)
        for (int pi = 0; pi < 32; ++pi) {
            double expect = sys.cmap().p_tuple(spec.element_at(pi)) == 0 ? 1.0 / 32 : 0.0;
            if (std::abs(w0.at(qi, pi) - expect) > 1e-10) c.fail("W'(|0>_L) shape");
        }

    // (c) encoded superpositions: four horizontal lines, closed-form amplitudes
    struct AB {
        std::complex<double> a, b;
    };
    for (const AB& ab : {AB{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)},
                         AB{0.6, std::complex<double>(0.0, 0.8)},
                         AB{std::complex<double>(0.0, 0.28), 0.96}}) {
        StateAmplitudes psi = ab.a * cf.logical_zero + ab.b * cf.logical_one;
        WignerTable w = wigner_of_state(net, QuantumState::from_vector(psi));
        std::complex<double> abc = ab.a * std::conj(ab.b);
        for (int qi = 0; qi < 32; ++qi) {
            tuple_t qt = sys.cmap().q_tuple(spec.element_at(qi));
            double sign = dot_parity(qt, kM) ? -1.0 : 1.0;
            for (int pi = 0; pi < 32; ++pi) {
                tuple_t pt = sys.cmap().p_tuple(spec.element_at(pi));
                double expect = 0.0;
                if (pt == 0) expect += std::norm(ab.a) / 32;
                if (pt == kM) expect += std::norm(ab.b) / 32;
                if (pt == p_I) expect += sign * (abc.real() + abc.imag()) / 32;
                if (pt == (p_I ^ kM)) expect += sign * (abc.real() - abc.imag()) / 32;
                if (std::abs(w.at(qi, pi) - expect) > 1e-10) c.fail("W'_I amplitude formula");
            }
        }
    }

    // (d) error images and the ZZ/X degeneracy
    SyndromeReport rep = syndrome_analysis(cf);
    c.check(rep.errors.size() == 15, "error count");
    c.check(rep.offsets_distinct, "offsets must be distinct");
    c.check(rep.offsets_avoid_logical_lines, "offsets must avoid {0, m}");
    c.check(rep.gram_max_offdiag <= 1e-10, "error images must be orthogonal");
    c.check(rep.code_space_overlap <= 1e-10, "error images must leave the code space");
    c.check(rep.degeneracy_pairs.size() == 5, "ZZ/X degeneracy must be detected");
}

void criterion_determinism() {
    Criterion c(10, "determinism: thread count cannot change any output", 0);
    ExperimentResult a = run_average_experiment(2, 4, 5, 777, 1);
    ExperimentResult b = run_average_experiment(2, 4, 5, 777, 3);
    c.check(records_to_csv(a.records) == records_to_csv(b.records), "records differ");
    c.check(aggregates_to_csv(a.aggregates) == aggregates_to_csv(b.aggregates),
            "aggregates differ");

    OverlapSearchResult o1 = overlap_search(2, 1);
    OverlapSearchResult o2 = overlap_search(2, 2);
    c.check(o1.satisfying == o2.satisfying && o1.per_m_satisfying == o2.per_m_satisfying,
            "overlap counts differ");
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;

    criterion_geometry();
    criterion_mub();
    criterion_wigner_axioms();
    criterion_bell();
    criterion_overlap();
    criterion_localizability();
    criterion_trends(extended);
    criterion_fwht();
    criterion_code5();
    criterion_determinism();

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
