#include "dwigner/dense.hpp"

namespace dwigner {

DenseOperator dense_matrix(const PauliElement& a) {
    require_dense(a.n, "dense_matrix");
    int d = 1 << a.n;
    std::uint32_t flip = dense_index(a.qbits, a.n);
    std::uint32_t zmask = dense_index(a.pbits, a.n);
    std::complex<double> ph = unit_phase(a.phase_exp);

    DenseOperator m = DenseOperator::Zero(d, d);
    for (std::uint32_t col = 0; col < static_cast<std::uint32_t>(d); ++col) {
        double sign = (std::popcount(zmask & col) & 1) ? -1.0 : 1.0;
        m(col ^ flip, col) = ph * sign;
    }
    return m;
}

StateAmplitudes apply_pauli(const PauliElement& a, const StateAmplitudes& psi) {
    int d = static_cast<int>(psi.size());
    std::uint32_t flip = dense_index(a.qbits, a.n);
    std::uint32_t zmask = dense_index(a.pbits, a.n);
    std::complex<double> ph = unit_phase(a.phase_exp);

    StateAmplitudes out(d);
    for (std::uint32_t r = 0; r < static_cast<std::uint32_t>(d); ++r) {
        std::uint32_t c = r ^ flip;
        double sign = (std::popcount(zmask & c) & 1) ? -1.0 : 1.0;
        out(r) = ph * sign * psi(c);
    }
    return out;
}

std::complex<double> pauli_expectation(const PauliElement& a, const StateAmplitudes& psi) {
    int d = static_cast<int>(psi.size());
    std::uint32_t flip = dense_index(a.qbits, a.n);
    std::uint32_t zmask = dense_index(a.pbits, a.n);

    std::complex<double> acc = 0;
    for (std::uint32_t r = 0; r < static_cast<std::uint32_t>(d); ++r) {
        double sign = (std::popcount(zmask & r) & 1) ? -1.0 : 1.0;
        acc += sign * psi(r) * std::conj(psi(r ^ flip));
    }
    return unit_phase(a.phase_exp) * acc;
}

std::complex<double> pauli_trace(const PauliElement& a, const DenseOperator& rho) {
    int d = static_cast<int>(rho.rows());
    std::uint32_t flip = dense_index(a.qbits, a.n);
    std::uint32_t zmask = dense_index(a.pbits, a.n);

    std::complex<double> acc = 0;
    for (std::uint32_t r = 0; r < static_cast<std::uint32_t>(d); ++r) {
        double sign = (std::popcount(zmask & r) & 1) ? -1.0 : 1.0;
        acc += sign * rho(r, r ^ flip);
    }
    return unit_phase(a.phase_exp) * acc;
}

}  // namespace dwigner
