#include "dwigner/interference.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>

#include "dwigner/fwht.hpp"
#include "dwigner/parallel.hpp"

namespace dwigner {

namespace {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void finish_profile(InterferenceProfile& prof) {
    int d = prof.d;
    double inv_d2 = 1.0 / (static_cast<double>(d) * d);
    prof.F.resize(d);
    std::vector<double> r(d), im(d);
    for (int q = 0; q < d; ++q) {
        prof.F[q] = prof.F_scaled[q].to_complex() * inv_d2;
        r[q] = std::abs(prof.F[q].real());
        im[q] = std::abs(prof.F[q].imag());
        prof.maxR = std::max(prof.maxR, r[q]);
        prof.maxI = std::max(prof.maxI, im[q]);
    }
    prof.entropyR = normalized_entropy(r);
    prof.entropyI = normalized_entropy(im);
    prof.degenerate = !prof.entropyR.has_value() || !prof.entropyI.has_value();
}

}  // namespace

InterferenceProfile interference_profile(const QuantumNet& net, tuple_t m) {
    if (m == 0) throw std::invalid_argument("interference profile needs m != 0");
    const RaySystem& sys = net.sys();
    int d = sys.d();

    InterferenceProfile prof;
    prof.n = sys.n();
    prof.d = d;
    prof.m = m;
    prof.F_scaled.resize(d);
    for (tuple_t pt = 0; pt < static_cast<tuple_t>(d); ++pt) {
        int f = net.f_of_tuples(m, pt);
        GaussInt g = i_pow(static_cast<unsigned>(std::popcount(m & pt)));
        prof.F_scaled[pt] = (f < 0) ? -g : g;
    }
    fwht_inplace(std::span<GaussInt>(prof.F_scaled));

    finish_profile(prof);
    return prof;
}

std::vector<GaussInt> interference_profile_direct(const QuantumNet& net, tuple_t m) {
    if (m == 0) throw std::invalid_argument("interference profile needs m != 0");
    int d = net.d();

    std::vector<GaussInt> g(d);
    for (tuple_t pt = 0; pt < static_cast<tuple_t>(d); ++pt) {
        int f = net.f_of_tuples(m, pt);
        GaussInt v = i_pow(static_cast<unsigned>(std::popcount(m & pt)));
        g[pt] = (f < 0) ? -v : v;
    }

    std::vector<GaussInt> out(d);
    for (tuple_t qt = 0; qt < static_cast<tuple_t>(d); ++qt) {
        GaussInt acc;
        for (tuple_t pt = 0; pt < static_cast<tuple_t>(d); ++pt)
            acc += dot_parity(qt, pt) ? -g[pt] : g[pt];
        out[qt] = acc;
    }
    return out;
}

std::vector<double> full_interference_term(const QuantumNet& net, tuple_t m,
                                           std::complex<double> a, std::complex<double> b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12)
        throw std::invalid_argument("amplitudes must satisfy |a|^2 + |b|^2 = 1");
    const RaySystem& sys = net.sys();
    const FieldSpec& spec = sys.spec();
    int d = sys.d();

    InterferenceProfile prof = interference_profile(net, m);
    std::complex<double> ab = a * std::conj(b);

    std::vector<double> term(static_cast<std::size_t>(d) * d);
    for (int qi = 0; qi < d; ++qi) {
        tuple_t qt = sys.cmap().q_tuple(spec.element_at(qi));
        for (int pi = 0; pi < d; ++pi) {
            tuple_t pt = sys.cmap().p_tuple(spec.element_at(pi));
            double sign = dot_parity(m, pt) ? -1.0 : 1.0;
            term[qi * d + pi] = 2.0 * std::real(ab * sign * prof.F[qt]);
        }
    }
    return term;
}

QuantumNet localized_net_for(std::shared_ptr<const RaySystem> sys, tuple_t m, tuple_t q_I) {
    if (m == 0) throw std::invalid_argument("localized net needs m != 0");
    int d = sys->d();

    std::vector<std::uint16_t> masks(sys->ray_count(), 0);
    for (tuple_t pt = 0; pt < static_cast<tuple_t>(d); ++pt) {
        // Make every term f i^(m.p') (-1)^(q_I.p') equal 1 (even m.p') or
        // i (odd m.p'); then F is fully constructive at q_I.
        int t4 = std::popcount(m & pt) & 3;
        int chi = (t4 == 0 || t4 == 1) ? 1 : -1;
        int target = dot_parity(q_I, pt) ? -chi : chi;

        PhasePoint beta = sys->point_from_tuples(m, pt);
        int ray = sys->ray_index_of(beta);
        RaySystem::Decomposition dec = sys->decompose(ray, beta);
        int f_all_plus = (dec.sigma == 2) ? -1 : 1;
        if (f_all_plus != target)
            masks[ray] |= static_cast<std::uint16_t>(dec.cmask & (~dec.cmask + 1));  // flip lowest generator
    }
    return QuantumNet(std::move(sys), std::move(masks));
}

namespace {

// Per (m, p'): the oblique ray slot, the generator selector and the fixed
// unit phase i^(m.p' - sigma); the horizontal point (p' = 0) is gauge-fixed
// to f = +1 and folds into a constant.
struct OverlapTerm {
    int ray_slot;  // oblique index k, or -1 for the gauge-fixed horizontal point
    std::uint32_t cmask;
    std::uint8_t phase;
};

std::vector<std::vector<OverlapTerm>> build_overlap_terms(const RaySystem& sys) {
    int d = sys.d();
    std::vector<std::vector<OverlapTerm>> terms(d - 1);
    for (tuple_t m = 1; m < static_cast<tuple_t>(d); ++m) {
        for (tuple_t pt = 0; pt < static_cast<tuple_t>(d); ++pt) {
            PhasePoint beta = sys.point_from_tuples(m, pt);
            int ray = sys.ray_index_of(beta);
            int mp = std::popcount(m & pt) & 3;
            if (ray == 1) {
                terms[m - 1].push_back({-1, 0, static_cast<std::uint8_t>(mp)});
            } else {
                RaySystem::Decomposition dec = sys.decompose(ray, beta);
                terms[m - 1].push_back(
                    {ray - 2, dec.cmask, static_cast<std::uint8_t>((mp - dec.sigma + 4) & 3)});
            }
        }
    }
    return terms;
}

}  // namespace

OverlapSearchResult overlap_search(int n, int threads) {
    if (n != 2 && n != 3) throw capability_error("overlap search is exhaustive only for n = 2, 3");
    auto sys = RaySystem::make_standard(n);
    int d = sys->d();
    int n_obl = d - 1;
    int bits = n * n_obl;

    std::vector<std::vector<OverlapTerm>> terms = build_overlap_terms(*sys);

    std::uint64_t total = std::uint64_t{1} << bits;
    std::uint32_t sign_bits_mask = (1u << n) - 1;

    struct Partial {
        std::uint64_t satisfying = 0;
        std::vector<std::uint64_t> per_m;
    };
    int nworkers = std::max(1, threads);
    std::vector<Partial> partials(nworkers);
    for (auto& p : partials) p.per_m.assign(d - 1, 0);

    std::uint64_t chunk = (total + nworkers - 1) / nworkers;
    parallel_for(static_cast<std::size_t>(nworkers), nworkers,
                 [&](std::size_t wbegin, std::size_t wend) {
        for (std::size_t w = wbegin; w < wend; ++w) {
            Partial& part = partials[w];
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = std::min(total, lo + chunk);
            for (std::uint64_t a = lo; a < hi; ++a) {
                bool all_ok = true;
                for (int mi = 0; mi < d - 1; ++mi) {
                    GaussInt acc;
                    for (const OverlapTerm& t : terms[mi]) {
                        int neg = t.ray_slot < 0
                                      ? 0
                                      : dot_parity(t.cmask,
                                                   static_cast<std::uint32_t>(a >> (t.ray_slot * n)) &
                                                       sign_bits_mask);
                        GaussInt u = i_pow(t.phase);
                        acc += neg ? -u : u;
                    }
                    if (acc.is_zero()) {
                        ++part.per_m[mi];
                    } else {
                        all_ok = false;
                    }
                }
                if (all_ok) ++part.satisfying;
            }
        }
    });

    OverlapSearchResult res;
    res.n = n;
    res.total_assignments = total;
    res.per_m_satisfying.assign(d - 1, 0);
    for (const Partial& p : partials) {
        res.satisfying += p.satisfying;
        for (int mi = 0; mi < d - 1; ++mi) res.per_m_satisfying[mi] += p.per_m[mi];
    }

    if (n == 2) {
        // Independent route: every one of the 2^10 full nets, conditions
        // evaluated through the generic f machinery.
        NetEnumerator en(sys);
        std::uint64_t sat = 0;
        for (std::uint64_t i = 0; i < en.count(); ++i) {
            QuantumNet net = en.at(i);
            bool ok = true;
            for (tuple_t m = 1; m < static_cast<tuple_t>(d) && ok; ++m) {
                GaussInt acc;
                for (tuple_t pt = 0; pt < static_cast<tuple_t>(d); ++pt) {
                    GaussInt u = i_pow(static_cast<unsigned>(std::popcount(m & pt)));
                    acc += net.f_of_tuples(m, pt) < 0 ? -u : u;
                }
                ok = acc.is_zero();
            }
            if (ok) ++sat;
        }
        res.full_net_total = en.count();
        res.full_net_satisfying = sat;
    }
    return res;
}

OverlapSearchResult overlap_search_randomized(int n, std::uint64_t samples, std::uint64_t seed,
                                              int threads) {
    if (n < 2 || n > kMaxQubits)
        throw capability_error("randomized overlap search supports n in 2..12");
    auto sys = RaySystem::make_standard(n);
    int d = sys->d();
    int n_obl = d - 1;

    std::vector<std::vector<OverlapTerm>> terms = build_overlap_terms(*sys);

    int nworkers = std::max(1, threads);
    std::vector<std::uint64_t> partials(nworkers, 0);

    std::uint64_t chunk = (samples + nworkers - 1) / nworkers;
    parallel_for(static_cast<std::size_t>(nworkers), nworkers,
                 [&](std::size_t wbegin, std::size_t wend) {
        std::vector<std::uint16_t> masks(n_obl);
        for (std::size_t w = wbegin; w < wend; ++w) {
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = std::min(samples, lo + chunk);
            for (std::uint64_t s = lo; s < hi; ++s) {
                // per-sample seed keeps the draw independent of the worker count
                std::mt19937_64 rng(derive_net_seed(seed, n, static_cast<int>(s)));
                for (int k = 0; k < n_obl; ++k)
                    masks[k] = static_cast<std::uint16_t>(rng() & ((1u << n) - 1));
                bool all_ok = true;
                for (int mi = 0; mi < d - 1 && all_ok; ++mi) {
                    GaussInt acc;
                    for (const OverlapTerm& t : terms[mi]) {
                        int neg = t.ray_slot < 0 ? 0 : dot_parity(t.cmask, masks[t.ray_slot]);
                        GaussInt u = i_pow(t.phase);
                        acc += neg ? -u : u;
                    }
                    all_ok = acc.is_zero();
                }
                if (all_ok) ++partials[w];
            }
        }
    });

    OverlapSearchResult res;
    res.n = n;
    res.total_assignments = samples;
    for (std::uint64_t p : partials) res.satisfying += p;
    return res;
}

std::optional<double> normalized_entropy(std::span<const double> values) {
    double total = 0;
    for (double v : values) {
        if (v < 0) throw std::invalid_argument("entropy input must be nonnegative");
        total += v;
    }
    if (total == 0) return std::nullopt;
    double log_d = std::log(static_cast<double>(values.size()));
    double s = 0;
    for (double v : values) {
        if (v == 0) continue;
        double p = v / total;
        s -= p * std::log(p);
    }
    return s / log_d;
}

std::uint64_t derive_net_seed(std::uint64_t master_seed, int n, int net_index) {
    std::uint64_t x = master_seed ^ (static_cast<std::uint64_t>(n) << 56) ^
                      static_cast<std::uint64_t>(net_index);
    for (int round = 0; round < 2; ++round) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        x ^= x >> 31;
    }
    return x;
}

ExperimentResult run_average_experiment(int n_min, int n_max, int nets_per_n,
                                        std::uint64_t master_seed, int threads) {
    if (n_min < 1 || n_max > kMaxQubits || n_min > n_max)
        throw capability_error("experiment range must satisfy 1 <= n_min <= n_max <= 12");
    if (nets_per_n < 1) throw std::invalid_argument("need at least one net per n");

    ExperimentResult result;
    for (int n = n_min; n <= n_max; ++n) {
        auto sys = RaySystem::make_standard(n);
        int d = sys->d();
        int per_net = d - 1;

        std::vector<QuantumNet> nets;
        std::vector<std::uint64_t> seeds;
        for (int i = 0; i < nets_per_n; ++i) {
            seeds.push_back(derive_net_seed(master_seed, n, i));
            nets.push_back(random_net(sys, seeds.back()));
        }

        std::vector<ExperimentRecord> records(static_cast<std::size_t>(nets_per_n) * per_net);
        parallel_for(records.size(), threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t slot = begin; slot < end; ++slot) {
                int net_idx = static_cast<int>(slot / per_net);
                tuple_t m = static_cast<tuple_t>(1 + slot % per_net);
                InterferenceProfile prof = interference_profile(nets[net_idx], m);
                ExperimentRecord& rec = records[slot];
                rec.n = n;
                rec.net_seed = seeds[net_idx];
                rec.m = m;
                rec.maxR = prof.maxR;
                rec.maxI = prof.maxI;
                rec.entropyR = prof.entropyR;
                rec.entropyI = prof.entropyI;
                rec.degenerate = prof.degenerate;
            }
        });

        AggregateRow row;
        row.n = n;
        row.record_count = static_cast<int>(records.size());

        // Ratios relative to the 1/d value on the interfering lines.
        std::vector<double> ratio_r, ratio_i, ent_r, ent_i;
        for (const ExperimentRecord& rec : records) {
            ratio_r.push_back(rec.maxR * d);
            ratio_i.push_back(rec.maxI * d);
            if (rec.entropyR) ent_r.push_back(*rec.entropyR);
            if (rec.entropyI) ent_i.push_back(*rec.entropyI);
            if (rec.degenerate) ++row.degenerate_count;
        }
        auto mean_and_dev = [](const std::vector<double>& xs, double& mean, double& dev) {
            if (xs.empty()) {
                mean = dev = 0;
                return;
            }
            double s = 0;
            for (double x : xs) s += x;
            mean = s / xs.size();
            double a = 0;
            for (double x : xs) a += std::abs(x - mean);
            dev = a / xs.size();
        };
        mean_and_dev(ratio_r, row.mean_ratio, row.mean_dev_ratio);
        mean_and_dev(ratio_i, row.mean_ratio_i, row.mean_dev_ratio_i);
        mean_and_dev(ent_r, row.mean_entropy, row.mean_dev_entropy);
        mean_and_dev(ent_i, row.mean_entropy_i, row.mean_dev_entropy_i);

        result.aggregates.push_back(row);
        result.records.insert(result.records.end(), records.begin(), records.end());
    }
    return result;
}

FitResult fit_exponential(const std::vector<std::pair<int, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("fit needs at least 3 points");
    for (const auto& [n, ratio] : points)
        if (ratio <= 0) throw std::invalid_argument("fit needs positive ratios");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, ratio] : points) {
        double x = n, y = std::log(ratio);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double cnt = static_cast<double>(points.size());
    double denom = cnt * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) throw std::invalid_argument("fit needs at least two distinct n");
    FitResult fit;
    fit.point_count = static_cast<int>(points.size());
    fit.slope = (cnt * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / cnt;

    double ss_res = 0, ss_tot = 0, ymean = sy / cnt;
    for (const auto& [n, ratio] : points) {
        double y = std::log(ratio);
        double pred = fit.intercept + fit.slope * n;
        ss_res += (y - pred) * (y - pred);
        ss_tot += (y - ymean) * (y - ymean);
    }
    fit.r_squared = ss_tot < 1e-300 ? (ss_res < 1e-12 ? 1.0 : 0.0) : 1.0 - ss_res / ss_tot;
    return fit;
}

std::string tuple_bits(tuple_t t, int n) {
    std::string s;
    for (int j = 0; j < n; ++j) s += (t >> j & 1u) ? '1' : '0';
    return s;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
    std::string out = "n,seed,m_bits,maxR,maxI,entropyR,entropyI,degenerate\n";
    for (const ExperimentRecord& r : records) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.net_seed);
        out += ',';
        out += tuple_bits(r.m, r.n);
        out += ',';
        out += format_double(r.maxR);
        out += ',';
        out += format_double(r.maxI);
        out += ',';
        out += r.entropyR ? format_double(*r.entropyR) : "nan";
        out += ',';
        out += r.entropyI ? format_double(*r.entropyI) : "nan";
        out += ',';
        out += r.degenerate ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string aggregates_to_csv(const std::vector<AggregateRow>& rows) {
    std::string out = "n,mean_ratio,mean_dev_ratio,mean_entropy,mean_dev_entropy\n";
    for (const AggregateRow& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += format_double(r.mean_ratio);
        out += ',';
        out += format_double(r.mean_dev_ratio);
        out += ',';
        out += format_double(r.mean_entropy);
        out += ',';
        out += format_double(r.mean_dev_entropy);
        out += '\n';
    }
    return out;
}

std::string decay_plot_data(const std::vector<AggregateRow>& rows) {
    std::string out;
    for (const AggregateRow& r : rows)
        out += std::to_string(r.n) + " " + format_double(r.mean_ratio) + "\n";
    return out;
}

std::string entropy_plot_data(const std::vector<AggregateRow>& rows) {
    std::string out;
    for (const AggregateRow& r : rows)
        out += std::to_string(r.n) + " " + format_double(r.mean_entropy) + "\n";
    return out;
}

}  // namespace dwigner
