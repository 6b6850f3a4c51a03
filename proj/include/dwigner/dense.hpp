#pragma once

#include <Eigen/Dense>
#include <complex>

#include "dwigner/errors.hpp"
#include "dwigner/pauli.hpp"

namespace dwigner {

using DenseOperator = Eigen::MatrixXcd;
using StateAmplitudes = Eigen::VectorXcd;

// Dense realizations are capped: d^2 entries per operator and often d^2
// operators in play.
constexpr int kDenseMaxQubits = 6;

inline void require_dense(int n, const char* what) {
    if (n > kDenseMaxQubits) throw capability_error(std::string(what) + ": dense path capped at n <= 6");
}

// Hilbert-space index of a basis ket labelled by a tuple. Qubit 1 is the
// most significant index bit.
inline std::uint32_t dense_index(tuple_t t, int n) {
    std::uint32_t idx = 0;
    for (int j = 0; j < n; ++j)
        if (t >> j & 1u) idx |= 1u << (n - 1 - j);
    return idx;
}

inline tuple_t tuple_from_dense_index(std::uint32_t idx, int n) {
    tuple_t t = 0;
    for (int j = 0; j < n; ++j)
        if (idx >> (n - 1 - j) & 1u) t |= 1u << j;
    return t;
}

// i^k
inline std::complex<double> unit_phase(unsigned k) {
    switch (k & 3u) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// d x d matrix of a phase-tracked Pauli; entries are exactly {0, +-1, +-i}
// times the tracked phase.
DenseOperator dense_matrix(const PauliElement& a);

StateAmplitudes apply_pauli(const PauliElement& a, const StateAmplitudes& psi);

// Tr(rho T) for a pure state, O(d).
std::complex<double> pauli_expectation(const PauliElement& a, const StateAmplitudes& psi);
// Tr(rho T) for a density operator, O(d).
std::complex<double> pauli_trace(const PauliElement& a, const DenseOperator& rho);

}  // namespace dwigner
