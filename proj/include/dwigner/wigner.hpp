#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dwigner/gauss_int.hpp"
#include "dwigner/quantum_net.hpp"

namespace dwigner {

// Pure state vector or density operator on d = 2^n dimensions.
class QuantumState {
  public:
    static QuantumState from_vector(StateAmplitudes psi);
    static QuantumState from_density(DenseOperator rho);
    static QuantumState computational(int n, tuple_t k);
    // (|0> + i^phase_quarter |m>)/sqrt(2); phi+ Bell is n=2, m=(1,1), phase 0.
    static QuantumState two_term_superposition(int n, tuple_t m, int phase_quarter = 0);
    static QuantumState superposition(int n, tuple_t m, std::complex<double> a,
                                      std::complex<double> b);
    static QuantumState bell_phi_plus();
    static QuantumState maximally_mixed(int n);

    bool is_pure() const { return std::holds_alternative<StateAmplitudes>(data_); }
    int dim() const;
    int n() const;

    const StateAmplitudes& vec() const { return std::get<StateAmplitudes>(data_); }
    const DenseOperator& rho() const { return std::get<DenseOperator>(data_); }
    DenseOperator density() const;  // rho either way

    std::complex<double> pauli_expect(const PauliElement& t) const;

  private:
    explicit QuantumState(StateAmplitudes v) : data_(std::move(v)) {}
    explicit QuantumState(DenseOperator m) : data_(std::move(m)) {}

    std::variant<StateAmplitudes, DenseOperator> data_;
};

// W(alpha) over the grid, indexed by (q, p) in field-power order (q-major).
// Stabilizer-type inputs additionally carry exact integer numerators over a
// common denominator.
struct WignerTable {
    int n = 0;
    int d = 0;
    std::vector<double> values;

    bool exact = false;
    std::vector<std::int64_t> num;
    std::int64_t den = 1;

    double at(int q_index, int p_index) const { return values[q_index * d + p_index]; }
    std::int64_t num_at(int q_index, int p_index) const { return num[q_index * d + p_index]; }
    double sum() const;

    std::string to_csv() const;
    std::string to_json() const;
};

// W(alpha) = Tr(rho A(alpha)) via the symplectic transform of the Pauli
// expectations (float path).
WignerTable wigner_of_state(const QuantumNet& net, const QuantumState& state);

// Exact table of a line state P(lambda): d^2 * W integer-valued.
WignerTable wigner_of_line_state(const QuantumNet& net, const Line& l);

// Exact table of (|0> + i^t |m>)/sqrt(2): 2 d^2 * W integer-valued.
WignerTable wigner_of_two_term(const QuantumNet& net, tuple_t m, int phase_quarter = 0);

// Point operator from the Pauli expansion A(alpha) = (1/d^2) sum_beta
// (-1)^(alpha^beta) f_beta T(beta).
DenseOperator point_operator(const QuantumNet& net, PhasePoint alpha);
// Same operator from the projector route A(alpha) = (1/d)(sum_k P(line) - 1).
DenseOperator point_operator_from_projectors(const QuantumNet& net, PhasePoint alpha);

double line_sum(const WignerTable& w, const PhaseSpaceGeometry& geom, const Line& l);

// d * sum_alpha w1(alpha) w2(alpha) = Tr(rho1 rho2).
double table_inner_product(const WignerTable& w1, const WignerTable& w2);

// max_alpha |W_{T rho T^dag}(alpha + delta) - W_rho(alpha)|.
double covariance_check(const QuantumNet& net, const QuantumState& state, PhasePoint delta);

}  // namespace dwigner
