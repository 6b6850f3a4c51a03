#include "dwigner/wigner.hpp"

#include <charconv>
#include <cmath>
#include <span>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dwigner/fwht.hpp"

namespace dwigner {

namespace {

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// Field-power order <-> tuple lookups for one ray system.
struct OrderMaps {
    std::vector<tuple_t> qtuple_of_ord, ptuple_of_ord;
    std::vector<int> ord_of_qtuple, ord_of_ptuple;

    explicit OrderMaps(const RaySystem& sys) {
        int d = sys.d();
        const FieldSpec& spec = sys.spec();
        const CoordinateMap& cmap = sys.cmap();
        qtuple_of_ord.resize(d);
        ptuple_of_ord.resize(d);
        ord_of_qtuple.resize(d);
        ord_of_ptuple.resize(d);
        for (int i = 0; i < d; ++i) {
            FieldElement e = spec.element_at(i);
            tuple_t qt = cmap.q_tuple(e), pt = cmap.p_tuple(e);
            qtuple_of_ord[i] = qt;
            ptuple_of_ord[i] = pt;
            ord_of_qtuple[qt] = i;
            ord_of_ptuple[pt] = i;
        }
    }
};

}  // namespace

QuantumState QuantumState::from_vector(StateAmplitudes psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("state vector is not normalized");
    return QuantumState(std::move(psi));
}

QuantumState QuantumState::from_density(DenseOperator rho) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("density operator must be square");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > 1e-12)
        throw std::invalid_argument("density operator must have unit trace");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("density operator must be Hermitian");
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("density operator must be positive semidefinite");
    return QuantumState(std::move(rho));
}

QuantumState QuantumState::computational(int n, tuple_t k) {
    StateAmplitudes psi = StateAmplitudes::Zero(1 << n);
    psi(dense_index(k, n)) = 1.0;
    return QuantumState(std::move(psi));
}

QuantumState QuantumState::two_term_superposition(int n, tuple_t m, int phase_quarter) {
    if (m == 0) throw std::invalid_argument("two-term superposition needs m != 0");
    StateAmplitudes psi = StateAmplitudes::Zero(1 << n);
    double r = 1.0 / std::sqrt(2.0);
    psi(dense_index(0, n)) = r;
    psi(dense_index(m, n)) = unit_phase(phase_quarter) * r;
    return QuantumState(std::move(psi));
}

QuantumState QuantumState::superposition(int n, tuple_t m, std::complex<double> a,
                                         std::complex<double> b) {
    if (m == 0) throw std::invalid_argument("superposition needs m != 0");
    StateAmplitudes psi = StateAmplitudes::Zero(1 << n);
    psi(dense_index(0, n)) = a;
    psi(dense_index(m, n)) = b;
    return from_vector(std::move(psi));
}

QuantumState QuantumState::bell_phi_plus() {
    return two_term_superposition(2, 0b11, 0);
}

QuantumState QuantumState::maximally_mixed(int n) {
    int d = 1 << n;
    return QuantumState(DenseOperator(DenseOperator::Identity(d, d) / static_cast<double>(d)));
}

int QuantumState::dim() const {
    return is_pure() ? static_cast<int>(vec().size()) : static_cast<int>(rho().rows());
}

int QuantumState::n() const {
    int d = dim();
    int n = 0;
    while ((1 << n) < d) ++n;
    return n;
}

DenseOperator QuantumState::density() const {
    if (is_pure()) return vec() * vec().adjoint();
    return rho();
}

std::complex<double> QuantumState::pauli_expect(const PauliElement& t) const {
    return is_pure() ? pauli_expectation(t, vec()) : pauli_trace(t, rho());
}

double WignerTable::sum() const {
    double s = 0;
    for (double v : values) s += v;
    return s;
}

std::string WignerTable::to_csv() const {
    std::string out = "q_index,p_index,value\n";
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) {
            out += std::to_string(q);
            out += ',';
            out += std::to_string(p);
            out += ',';
            out += format_double(at(q, p));
            out += '\n';
        }
    return out;
}

std::string WignerTable::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["d"] = d;
    j["order"] = "field_power";
    if (exact) {
        j["denominator"] = den;
        j["numerators"] = num;
    } else {
        j["values"] = values;
    }
    return j.dump();
}

WignerTable wigner_of_state(const QuantumNet& net, const QuantumState& state) {
    const RaySystem& sys = net.sys();
    require_dense(sys.n(), "wigner_of_state");
    int n = sys.n(), d = sys.d();
    if (state.dim() != d) throw std::invalid_argument("state dimension does not match the field");
    if (state.is_pure() && std::abs(state.vec().norm() - 1.0) > 1e-12)
        throw std::invalid_argument("state vector is not normalized");

    // W(alpha) d^2 = sum_beta (-1)^(alpha^beta) f_beta Tr(rho T(beta)) is a
    // 2n-bit Walsh-Hadamard transform once beta's halves are swapped.
    std::vector<std::complex<double>> c(static_cast<std::size_t>(d) * d);
    for (tuple_t qt = 0; qt < static_cast<tuple_t>(d); ++qt)
        for (tuple_t pt = 0; pt < static_cast<tuple_t>(d); ++pt) {
            PhasePoint beta = sys.point_from_tuples(qt, pt);
            double f = beta.is_origin() ? 1.0 : static_cast<double>(net.f_of(beta));
            std::complex<double> tr = state.pauli_expect(sys.realize_point(beta));
            c[(static_cast<std::size_t>(pt) << n) | qt] = f * tr;
        }
    fwht_inplace(std::span<std::complex<double>>(c));

    OrderMaps maps(sys);
    WignerTable w;
    w.n = n;
    w.d = d;
    w.values.resize(c.size());
    double scale = 1.0 / (static_cast<double>(d) * d);
    for (int qi = 0; qi < d; ++qi)
        for (int pi = 0; pi < d; ++pi) {
            std::size_t src = (static_cast<std::size_t>(maps.qtuple_of_ord[qi]) << n) |
                              maps.ptuple_of_ord[pi];
            w.values[qi * d + pi] = c[src].real() * scale;
        }
    return w;
}

WignerTable wigner_of_line_state(const QuantumNet& net, const Line& l) {
    const RaySystem& sys = net.sys();
    int n = sys.n(), d = sys.d();
    const PhaseSpaceGeometry& geom = sys.geometry();

    PhasePoint anchor = geom.anchor_of(l);
    tuple_t aq = sys.q_tuple(anchor), ap = sys.p_tuple(anchor);

    // The expansion coefficient f_beta Tr(P(l) T(beta)) collapses to
    // (-1)^(anchor^beta) on the ray: the f's cancel, and the character sum
    // over the Lagrangian ray subspace leaves 1/d on l and 0 elsewhere.
    std::vector<std::int64_t> c(static_cast<std::size_t>(d) * d, 0);
    for (const PhasePoint& beta : geom.points_of_line(geom.ray_of(l.striation))) {
        tuple_t bq = sys.q_tuple(beta), bp = sys.p_tuple(beta);
        int anchor_sign = symplectic_product(aq, ap, bq, bp) ? -1 : 1;
        c[(static_cast<std::size_t>(bp) << n) | bq] += anchor_sign;
    }
    fwht_inplace(std::span<std::int64_t>(c));

    OrderMaps maps(sys);
    WignerTable w;
    w.n = n;
    w.d = d;
    w.exact = true;
    w.den = static_cast<std::int64_t>(d) * d;
    w.num.resize(c.size());
    w.values.resize(c.size());
    for (int qi = 0; qi < d; ++qi)
        for (int pi = 0; pi < d; ++pi) {
            std::size_t src = (static_cast<std::size_t>(maps.qtuple_of_ord[qi]) << n) |
                              maps.ptuple_of_ord[pi];
            w.num[qi * d + pi] = c[src];
            w.values[qi * d + pi] = static_cast<double>(c[src]) / static_cast<double>(w.den);
        }
    return w;
}

WignerTable wigner_of_two_term(const QuantumNet& net, tuple_t m, int phase_quarter) {
    const RaySystem& sys = net.sys();
    if (!sys.frame().is_standard())
        throw std::invalid_argument("exact two-term path requires the standard frame");
    if (m == 0) throw std::invalid_argument("two-term superposition needs m != 0");
    int n = sys.n(), d = sys.d();

    // 2<psi|T(q,p)|psi> for psi = (|0> + i^t |m>)/sqrt(2) is a Gaussian
    // integer supported on q in {0, m}.
    std::vector<GaussInt> c(static_cast<std::size_t>(d) * d);
    GaussInt w_amp = i_pow(static_cast<unsigned>(phase_quarter));
    GaussInt w_conj = i_pow(static_cast<unsigned>(4 - (phase_quarter & 3)));
    for (tuple_t pt = 0; pt < static_cast<tuple_t>(d); ++pt) {
        int pm = dot_parity(pt, m);
        {
            // q = 0: 1 + (-1)^(p.m)
            PauliElement t = translation_op(n, 0, pt);
            PhasePoint beta = sys.point_from_tuples(0, pt);
            int f = beta.is_origin() ? 1 : net.f_of(beta);
            GaussInt g{1 + (pm ? -1 : 1), 0};
            if (!g.is_zero()) {
                GaussInt v = g.times_i_pow(t.phase_exp);
                c[(static_cast<std::size_t>(pt) << n) | 0] = (f < 0) ? -v : v;
            }
        }
        {
            // q = m: conj(w) + w (-1)^(p.m)
            PauliElement t = translation_op(n, m, pt);
            PhasePoint beta = sys.point_from_tuples(m, pt);
            int f = net.f_of(beta);
            GaussInt g = w_conj + (pm ? -w_amp : w_amp);
            if (!g.is_zero()) {
                GaussInt v = g.times_i_pow(t.phase_exp);
                c[(static_cast<std::size_t>(pt) << n) | m] = (f < 0) ? -v : v;
            }
        }
    }
    fwht_inplace(std::span<GaussInt>(c));

    OrderMaps maps(sys);
    WignerTable w;
    w.n = n;
    w.d = d;
    w.exact = true;
    w.den = 2 * static_cast<std::int64_t>(d) * d;
    w.num.resize(c.size());
    w.values.resize(c.size());
    for (int qi = 0; qi < d; ++qi)
        for (int pi = 0; pi < d; ++pi) {
            std::size_t src = (static_cast<std::size_t>(maps.qtuple_of_ord[qi]) << n) |
                              maps.ptuple_of_ord[pi];
            if (c[src].im != 0) throw std::logic_error("two-term Wigner value came out complex");
            w.num[qi * d + pi] = c[src].re;
            w.values[qi * d + pi] = static_cast<double>(c[src].re) / static_cast<double>(w.den);
        }
    return w;
}

DenseOperator point_operator(const QuantumNet& net, PhasePoint alpha) {
    const RaySystem& sys = net.sys();
    require_dense(sys.n(), "point_operator");
    int n = sys.n(), d = sys.d();
    tuple_t aq = sys.q_tuple(alpha), ap = sys.p_tuple(alpha);

    DenseOperator acc = DenseOperator::Zero(d, d);
    for (tuple_t qt = 0; qt < static_cast<tuple_t>(d); ++qt)
        for (tuple_t pt = 0; pt < static_cast<tuple_t>(d); ++pt) {
            PhasePoint beta = sys.point_from_tuples(qt, pt);
            int f = beta.is_origin() ? 1 : net.f_of(beta);
            int wedge = symplectic_product(aq, ap, qt, pt);
            double coeff = (f < 0) != (wedge != 0) ? -1.0 : 1.0;

            PauliElement t = sys.realize_point(beta);
            std::uint32_t flip = dense_index(t.qbits, n);
            std::uint32_t zmask = dense_index(t.pbits, n);
            std::complex<double> ph = coeff * unit_phase(t.phase_exp);
            for (std::uint32_t col = 0; col < static_cast<std::uint32_t>(d); ++col) {
                double sign = (std::popcount(zmask & col) & 1) ? -1.0 : 1.0;
                acc(col ^ flip, col) += ph * sign;
            }
        }
    return acc / (static_cast<double>(d) * d);
}

DenseOperator point_operator_from_projectors(const QuantumNet& net, PhasePoint alpha) {
    const RaySystem& sys = net.sys();
    require_dense(sys.n(), "point_operator_from_projectors");
    int d = sys.d();
    const PhaseSpaceGeometry& geom = sys.geometry();

    DenseOperator acc = DenseOperator::Zero(d, d);
    for (int s = 0; s < geom.striation_count(); ++s)
        acc += line_projector(net, geom.line_in_striation_through(Striation::from_index(s), alpha));
    acc -= DenseOperator::Identity(d, d);
    return acc / static_cast<double>(d);
}

double line_sum(const WignerTable& w, const PhaseSpaceGeometry& geom, const Line& l) {
    const FieldSpec& spec = geom.spec();
    double s = 0;
    for (const PhasePoint& pt : geom.points_of_line(l))
        s += w.at(spec.order_index_of(pt.q), spec.order_index_of(pt.p));
    return s;
}

double table_inner_product(const WignerTable& w1, const WignerTable& w2) {
    if (w1.d != w2.d) throw std::invalid_argument("table dimensions differ");
    double s = 0;
    for (std::size_t i = 0; i < w1.values.size(); ++i) s += w1.values[i] * w2.values[i];
    return s * w1.d;
}

double covariance_check(const QuantumNet& net, const QuantumState& state, PhasePoint delta) {
    const RaySystem& sys = net.sys();
    const FieldSpec& spec = sys.spec();
    int d = sys.d();

    WignerTable before = wigner_of_state(net, state);

    PauliElement t = sys.realize_point(delta);
    QuantumState moved = state.is_pure()
                             ? QuantumState::from_vector(apply_pauli(t, state.vec()))
                             : QuantumState::from_density(dense_matrix(t) * state.rho() *
                                                          dense_matrix(t).adjoint());
    WignerTable after = wigner_of_state(net, moved);

    double worst = 0;
    for (int qi = 0; qi < d; ++qi)
        for (int pi = 0; pi < d; ++pi) {
            FieldElement q2 = spec.add(spec.element_at(qi), delta.q);
            FieldElement p2 = spec.add(spec.element_at(pi), delta.p);
            double dev = std::abs(after.at(spec.order_index_of(q2), spec.order_index_of(p2)) -
                                  before.at(qi, pi));
            worst = std::max(worst, dev);
        }
    return worst;
}

}  // namespace dwigner
